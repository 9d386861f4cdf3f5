#pragma once

// Shared fixtures and generators for the test suites. The two reference
// systems are the classic worked examples this library is checked against:
//   system-1: n=105, retrieve (0,0,51,24,30), reuse (18,18,48,21,0),
//             revise (36,30,39,0,0)
//   system-2: n=90,  retrieve (0,18,45,27,0), reuse (18,24,48,0,0),
//             revise (36,27,27,0,0)

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cbreval/assessment.hpp"
#include "cbreval/cbr_sim.hpp"
#include "cbreval/centroid.hpp"
#include "cbreval/grade.hpp"
#include "cbreval/step_distribution.hpp"

namespace testfx {

inline cbreval::SystemRecord system1() {
    return cbreval::make_system_record("system-1", {0, 0, 51, 24, 30},
                                       {18, 18, 48, 21, 0}, {36, 30, 39, 0, 0});
}

inline cbreval::SystemRecord system2() {
    return cbreval::make_system_record("system-2", {0, 18, 45, 27, 0},
                                       {18, 24, 48, 0, 0}, {36, 27, 27, 0, 0});
}

// Retrieval crisp at the lowest grade while reuse/revise are crisp at the
// highest: no well-ordered profile can carry mass.
inline cbreval::SystemRecord degenerate_system() {
    return cbreval::make_system_record("degenerate", {2, 0, 0, 0, 0}, {0, 0, 0, 0, 2},
                                       {0, 0, 0, 0, 2});
}

// Every step crisp at one grade.
inline cbreval::SystemRecord crisp_system(std::string name, cbreval::Grade g,
                                          std::uint32_t n = 2) {
    cbreval::GradeCounts counts{};
    counts[static_cast<std::size_t>(g)] = n;
    return cbreval::make_system_record(std::move(name), counts, counts, counts);
}

// Random per-grade counts with total >= 2.
inline cbreval::GradeCounts random_counts(std::mt19937& rng, std::uint32_t max_count = 40) {
    std::uniform_int_distribution<std::uint32_t> dist(0, max_count);
    while (true) {
        cbreval::GradeCounts counts{};
        std::uint64_t total = 0;
        for (auto& c : counts) {
            c = dist(rng);
            total += c;
        }
        if (total >= 2) {
            return counts;
        }
    }
}

// Random valid system; all three steps share the same total.
inline cbreval::SystemRecord random_system(std::mt19937& rng, std::string name) {
    const cbreval::GradeCounts retrieve = random_counts(rng);
    std::uint64_t total = 0;
    for (auto c : retrieve) {
        total += c;
    }
    // draw two more count vectors with the same total by distributing balls
    auto redistribute = [&](void) {
        cbreval::GradeCounts counts{};
        std::uniform_int_distribution<std::size_t> pick(0, cbreval::kGradeCount - 1);
        for (std::uint64_t i = 0; i < total; ++i) {
            ++counts[pick(rng)];
        }
        return counts;
    };
    return cbreval::make_system_record(std::move(name), retrieve, redistribute(),
                                       redistribute());
}

// Random five-bar heights with at least one strictly positive bar.
inline std::vector<double> random_bars(std::mt19937& rng, std::size_t n = 5) {
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    while (true) {
        std::vector<double> heights(n);
        double sum = 0.0;
        for (auto& h : heights) {
            h = dist(rng);
            sum += h;
        }
        if (sum > 1e-3) {
            return heights;
        }
    }
}

inline bool approx(double actual, double expected, double tol) {
    return std::abs(actual - expected) <= tol;
}

} // namespace testfx
