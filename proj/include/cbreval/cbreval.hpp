#pragma once

// Umbrella header: fuzzy assessment and comparison of CBR systems, plus the
// deterministic simulation harness that produces graded case logs.

#include "cbreval/assessment.hpp"
#include "cbreval/case_log.hpp"
#include "cbreval/cbr_sim.hpp"
#include "cbreval/centroid.hpp"
#include "cbreval/errors.hpp"
#include "cbreval/grade.hpp"
#include "cbreval/io.hpp"
#include "cbreval/profile.hpp"
#include "cbreval/report.hpp"
#include "cbreval/step_distribution.hpp"
#include "cbreval/uncertainty.hpp"
