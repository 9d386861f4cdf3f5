#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cbreval/case_log.hpp"
#include "cbreval/errors.hpp"
#include "cbreval/grade.hpp"

namespace cbreval {

// A solved problem: feature description, its solution, and optionally the
// observed solution quality once the case has been worked.
struct Case {
    std::string id;
    std::vector<double> features;
    double solution = 0.0;
    std::optional<double> outcome;
};

// Ordered collection of cases sharing one feature dimension, unique ids.
class CaseLibrary {
public:
    explicit CaseLibrary(std::size_t feature_dim) : dim_(feature_dim) {}

    std::size_t feature_dim() const { return dim_; }
    std::size_t size() const { return cases_.size(); }
    bool empty() const { return cases_.empty(); }
    const std::vector<Case>& cases() const { return cases_; }

    bool contains(std::string_view id) const {
        return ids_.count(std::string(id)) > 0;
    }

    void add(Case c) {
        if (c.features.size() != dim_) {
            throw DimensionError("case '" + c.id + "' has " +
                                 std::to_string(c.features.size()) +
                                 " features, library expects " + std::to_string(dim_));
        }
        for (double f : c.features) {
            if (!(f >= 0.0 && f <= 1.0)) {
                throw RangeError("case '" + c.id + "' has a feature outside [0,1]");
            }
        }
        if (!ids_.insert(c.id).second) {
            throw IdConflictError("case id '" + c.id + "' already in library");
        }
        cases_.push_back(std::move(c));
    }

private:
    std::size_t dim_;
    std::vector<Case> cases_;
    std::unordered_set<std::string> ids_;
};

struct RetrievalResult {
    std::size_t index = 0; // into library.cases()
    double similarity = 0.0;
};

// R1: find the stored case most similar to the query. Similarity is
// 1 - euclidean distance / sqrt(d), which stays in [0,1] for [0,1]-bounded
// features. Equal similarity is broken toward the lexicographically
// smallest id.
inline RetrievalResult retrieve(const CaseLibrary& library, std::span<const double> query) {
    if (library.empty()) {
        throw NoCasesError("retrieval from an empty case library");
    }
    if (query.size() != library.feature_dim()) {
        throw DimensionError("query has " + std::to_string(query.size()) +
                             " features, library expects " +
                             std::to_string(library.feature_dim()));
    }
    const double diameter = std::sqrt(static_cast<double>(library.feature_dim()));
    bool have_best = false;
    RetrievalResult best;
    for (std::size_t i = 0; i < library.cases().size(); ++i) {
        const Case& c = library.cases()[i];
        double dist_sq = 0.0;
        for (std::size_t k = 0; k < query.size(); ++k) {
            const double diff = c.features[k] - query[k];
            dist_sq += diff * diff;
        }
        const double similarity = std::max(0.0, 1.0 - std::sqrt(dist_sq) / diameter);
        const bool better =
            !have_best || similarity > best.similarity ||
            (similarity == best.similarity && c.id < library.cases()[best.index].id);
        if (better) {
            best = {i, similarity};
            have_best = true;
        }
    }
    return best;
}

// R2: null adaptation, the retrieved solution is proposed unchanged.
inline double reuse(const Case& retrieved) {
    return retrieved.solution;
}

// R3: quality of the proposed solution against the known truth,
// 1 - min(1, |proposed - truth|).
inline double revise(double proposed, double truth) {
    return 1.0 - std::min(1.0, std::abs(proposed - truth));
}

// R4: retention is crisp; every worked case enters the library.
inline void retain(CaseLibrary& library, Case c) {
    library.add(std::move(c));
}

// Cut points mapping a quality score in [0,1] to a grade via left-closed
// intervals: [0,t1) -> a, [t1,t2) -> b, [t2,t3) -> c, [t3,t4) -> d,
// [t4,1] -> e.
struct GradeThresholds {
    std::array<double, 4> cuts{0.2, 0.4, 0.6, 0.8};

    static GradeThresholds defaults() { return {}; }

    static GradeThresholds validated(const std::array<double, 4>& cuts) {
        double prev = 0.0;
        for (double c : cuts) {
            if (!(c > prev && c < 1.0)) {
                throw RangeError("thresholds must be strictly increasing inside (0,1)");
            }
            prev = c;
        }
        return GradeThresholds{cuts};
    }
};

inline Grade grade_step(double score, const GradeThresholds& thresholds) {
    if (!(score >= 0.0 && score <= 1.0)) {
        throw RangeError("score " + std::to_string(score) + " outside [0,1]");
    }
    for (std::size_t i = 0; i < thresholds.cuts.size(); ++i) {
        if (score < thresholds.cuts[i]) {
            return static_cast<Grade>(i);
        }
    }
    return Grade::e;
}

struct Problem {
    std::vector<double> features;
    double truth = 0.0;
};

struct BatchResult {
    std::vector<CaseLogEntry> log;
    CaseLibrary library;
};

// Works the problem list through the full cycle in order. Retrieval and
// reuse are graded on the retrieval similarity (the copy strategy makes
// reuse exactly as good as the retrieved fit), revision on its quality, and
// every problem is retained with the corrected solution. Fully deterministic:
// the retained cases are named p1, p2, ... in problem order.
inline BatchResult run_batch(CaseLibrary library, std::span<const Problem> problems,
                             const GradeThresholds& thresholds) {
    std::vector<CaseLogEntry> log;
    log.reserve(problems.size());
    for (std::size_t k = 0; k < problems.size(); ++k) {
        const Problem& problem = problems[k];
        const RetrievalResult found = retrieve(library, problem.features);
        const double proposed = reuse(library.cases()[found.index]);
        const double quality = revise(proposed, problem.truth);

        std::string id = "p" + std::to_string(k + 1);
        log.push_back({id, grade_step(found.similarity, thresholds),
                       grade_step(found.similarity, thresholds),
                       grade_step(quality, thresholds)});
        retain(library, Case{std::move(id), problem.features, problem.truth, quality});
    }
    return BatchResult{std::move(log), std::move(library)};
}

} // namespace cbreval
