#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "cbreval/errors.hpp"
#include "cbreval/grade.hpp"

namespace cbreval {

// The three fuzzily represented CBR steps. Retention is deliberately absent:
// every case is retained, so that step carries no distribution.
enum class Step : std::uint8_t { retrieve = 0, reuse, revise };

inline constexpr std::size_t kStepCount = 3;

inline constexpr std::array<Step, kStepCount> kAllSteps = {
    Step::retrieve, Step::reuse, Step::revise};

constexpr std::string_view step_name(Step s) {
    constexpr std::array<std::string_view, kStepCount> names = {
        "retrieve", "reuse", "revise"};
    return names[static_cast<std::size_t>(s)];
}

using GradeCounts = std::array<std::uint32_t, kGradeCount>;

// Fuzzy set over the five grades for one CBR step, backed by how many of the
// n cases achieved each grade. Membership of a grade is its relative
// frequency, so the five memberships sum to 1.
struct StepDistribution {
    Step step = Step::retrieve;
    GradeCounts counts{};
    std::uint64_t total = 0;

    double membership(Grade g) const {
        return static_cast<double>(counts[static_cast<std::size_t>(g)]) /
               static_cast<double>(total);
    }

    std::array<double, kGradeCount> memberships() const {
        std::array<double, kGradeCount> out{};
        for (std::size_t i = 0; i < kGradeCount; ++i) {
            out[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
        }
        return out;
    }
};

using StepDistributions = std::array<StepDistribution, kStepCount>;

// Builds a validated distribution from raw per-grade counts. A case library
// must hold at least two cases.
inline StepDistribution build_step_distribution(Step step, const GradeCounts& counts) {
    const std::uint64_t total =
        std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    if (total < 2) {
        throw InvalidSystemError("step '" + std::string(step_name(step)) +
                                 "': case count must be at least 2, got " +
                                 std::to_string(total));
    }
    return StepDistribution{step, counts, total};
}

} // namespace cbreval
