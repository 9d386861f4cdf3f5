#pragma once

#include <string>

#include "cbreval/grade.hpp"

namespace cbreval {

// One graded pass through the CBR cycle. The simulator emits these, the
// assessment side tallies them into system records.
struct CaseLogEntry {
    std::string case_id;
    Grade retrieve_grade = Grade::a;
    Grade reuse_grade = Grade::a;
    Grade revise_grade = Grade::a;

    friend bool operator==(const CaseLogEntry&, const CaseLogEntry&) = default;
};

} // namespace cbreval
