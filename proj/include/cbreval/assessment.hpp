#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cbreval/case_log.hpp"
#include "cbreval/centroid.hpp"
#include "cbreval/errors.hpp"
#include "cbreval/profile.hpp"
#include "cbreval/step_distribution.hpp"
#include "cbreval/uncertainty.hpp"

namespace cbreval {

// A named CBR system: n worked cases and the per-step grade counts.
struct SystemRecord {
    std::string name;
    std::uint64_t cases = 0;
    StepDistributions steps;
};

// Validates the counts and assembles a record. Every step must tally the
// same number of cases, at least two.
inline SystemRecord make_system_record(std::string name, const GradeCounts& retrieve,
                                       const GradeCounts& reuse,
                                       const GradeCounts& revise) {
    SystemRecord record;
    record.name = std::move(name);
    record.steps = {build_step_distribution(Step::retrieve, retrieve),
                    build_step_distribution(Step::reuse, reuse),
                    build_step_distribution(Step::revise, revise)};
    record.cases = record.steps[0].total;
    for (const auto& step : record.steps) {
        if (step.total != record.cases) {
            throw InvalidSystemError(
                "system '" + record.name + "': step '" +
                std::string(step_name(step.step)) + "' tallies " +
                std::to_string(step.total) + " cases, expected " +
                std::to_string(record.cases));
        }
    }
    return record;
}

// Tallies a case log into a system record; each entry contributes one count
// per step.
inline SystemRecord grades_from_case_log(std::span<const CaseLogEntry> entries,
                                         std::string name) {
    if (entries.size() < 2) {
        throw InvalidSystemError("case log for '" + name + "' has " +
                                 std::to_string(entries.size()) +
                                 " entries, need at least 2");
    }
    GradeCounts retrieve{};
    GradeCounts reuse{};
    GradeCounts revise{};
    for (const auto& entry : entries) {
        ++retrieve[static_cast<std::size_t>(entry.retrieve_grade)];
        ++reuse[static_cast<std::size_t>(entry.reuse_grade)];
        ++revise[static_cast<std::size_t>(entry.revise_grade)];
    }
    return make_system_record(std::move(name), retrieve, reuse, revise);
}

// Full single-system assessment under both models.
struct AssessmentResult {
    std::string name;
    std::uint64_t cases = 0;
    StepDistributions steps;
    std::vector<ProfileAnalysis> profiles; // all 125, enumeration order
    Profile max_membership_profile;
    double max_membership = 0.0;
    UncertaintyResult uncertainty;
    std::array<Centroid, kStepCount> centroids;
};

// Runs the whole pipeline on one record: profile table and possibilities,
// total possibilistic uncertainty, and the per-step centroids of the same
// membership vectors the profile table is built from.
inline AssessmentResult assess_system(const SystemRecord& record) {
    AssessmentResult out;
    out.name = record.name;
    out.cases = record.cases;
    out.steps = record.steps;

    const std::vector<ProfileEntry> entries = enumerate_profiles(record.steps);
    out.profiles = possibility_distribution(entries);
    for (const auto& a : out.profiles) {
        if (a.membership > out.max_membership) {
            out.max_membership = a.membership;
            out.max_membership_profile = a.profile;
        }
    }
    out.uncertainty =
        total_uncertainty(OrderedPossibilityDistribution::from_analyses(out.profiles));
    for (std::size_t i = 0; i < kStepCount; ++i) {
        const auto memberships = record.steps[i].memberships();
        out.centroids[i] =
            centroid_bars(BarDistribution{{memberships.begin(), memberships.end()}, true});
    }
    return out;
}

// One system inside a comparison. A degenerate system (no well-ordered
// outcome possible) keeps its centroids but has no possibilistic side.
struct ComparisonEntry {
    std::string name;
    std::uint64_t cases = 0;
    StepDistributions steps;
    std::array<Centroid, kStepCount> centroids;
    std::vector<ProfileAnalysis> profiles; // empty when degenerate
    std::optional<UncertaintyResult> uncertainty;
    bool degenerate = false;
};

struct PairwiseStepOutcomes {
    std::size_t first = 0; // indices into ComparisonReport::entries
    std::size_t second = 0;
    std::array<CentroidOutcome, kStepCount> outcomes{};
};

// Cross-model comparison of two or more systems.
struct ComparisonReport {
    std::vector<ComparisonEntry> entries;
    std::vector<RankedUncertainty> uncertainty_ranking; // assessable systems only
    std::vector<PairwiseStepOutcomes> pairwise;         // all pairs i < j
    std::array<std::optional<std::size_t>, kStepCount> step_winners;
    std::optional<std::size_t> uncertainty_best; // unique lowest total, if any
    std::optional<std::size_t> centroid_best;    // unique most step wins, if any
    bool uncertainty_tie = false;
    bool centroid_tie = false;
    bool models_agree = false;
    std::vector<std::string> summary;
};

namespace detail {

// Index of the entry whose step centroid beats every other entry's, or
// nullopt when the top is tied.
inline std::optional<std::size_t> step_winner(std::span<const ComparisonEntry> entries,
                                              std::size_t step) {
    std::size_t best = 0;
    bool tied = false;
    for (std::size_t i = 1; i < entries.size(); ++i) {
        const CentroidOutcome o =
            compare_centroid(entries[i].centroids[step], entries[best].centroids[step]);
        if (o == CentroidOutcome::first_better) {
            best = i;
            tied = false;
        } else if (o == CentroidOutcome::tie) {
            tied = true;
        }
    }
    if (tied) {
        return std::nullopt;
    }
    return best;
}

} // namespace detail

// Assesses every record and confronts the two models. Degenerate systems are
// excluded from the uncertainty ranking but still compared by centroid. The
// centroid model's overall winner is the system taking strictly more step
// wins than any other; models agree only when both models name the same
// unique winner.
inline ComparisonReport compare_systems(std::span<const SystemRecord> records) {
    if (records.size() < 2) {
        throw InvalidSystemError("comparison needs at least 2 systems, got " +
                                 std::to_string(records.size()));
    }
    ComparisonReport report;
    report.entries.reserve(records.size());
    for (const auto& record : records) {
        ComparisonEntry entry;
        entry.name = record.name;
        entry.cases = record.cases;
        entry.steps = record.steps;
        try {
            AssessmentResult assessed = assess_system(record);
            entry.centroids = assessed.centroids;
            entry.profiles = std::move(assessed.profiles);
            entry.uncertainty = assessed.uncertainty;
        } catch (const DegenerateSystemError&) {
            entry.degenerate = true;
            for (std::size_t i = 0; i < kStepCount; ++i) {
                const auto memberships = record.steps[i].memberships();
                entry.centroids[i] = centroid_bars(
                    BarDistribution{{memberships.begin(), memberships.end()}, true});
            }
        }
        report.entries.push_back(std::move(entry));
    }

    // Possibilistic side: rank the assessable systems by total uncertainty.
    std::vector<std::pair<std::string, UncertaintyResult>> ranked_input;
    for (const auto& entry : report.entries) {
        if (entry.uncertainty) {
            ranked_input.emplace_back(entry.name, *entry.uncertainty);
        }
    }
    report.uncertainty_ranking = rank_by_uncertainty(std::move(ranked_input));
    double best_total = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < report.entries.size(); ++i) {
        if (!report.entries[i].uncertainty) {
            continue;
        }
        const double total = report.entries[i].uncertainty->total;
        if (total < best_total) {
            report.uncertainty_best = i;
            best_total = total;
        } else if (total == best_total) {
            report.uncertainty_best.reset(); // tied at the top
        }
    }
    report.uncertainty_tie = !report.uncertainty_best.has_value();

    // Centroid side: pairwise outcomes, per-step winners, overall winner.
    for (std::size_t i = 0; i < report.entries.size(); ++i) {
        for (std::size_t j = i + 1; j < report.entries.size(); ++j) {
            PairwiseStepOutcomes pair{i, j, {}};
            for (std::size_t s = 0; s < kStepCount; ++s) {
                pair.outcomes[s] = compare_centroid(report.entries[i].centroids[s],
                                                    report.entries[j].centroids[s]);
            }
            report.pairwise.push_back(pair);
        }
    }
    std::vector<int> wins(report.entries.size(), 0);
    for (std::size_t s = 0; s < kStepCount; ++s) {
        report.step_winners[s] = detail::step_winner(report.entries, s);
        if (report.step_winners[s]) {
            ++wins[*report.step_winners[s]];
        }
    }
    std::size_t top = 0;
    bool top_tied = false;
    for (std::size_t i = 1; i < wins.size(); ++i) {
        if (wins[i] > wins[top]) {
            top = i;
            top_tied = false;
        } else if (wins[i] == wins[top]) {
            top_tied = true;
        }
    }
    if (top_tied || wins[top] == 0) {
        report.centroid_tie = true;
    } else {
        report.centroid_best = top;
    }

    report.models_agree = !report.uncertainty_tie && !report.centroid_tie &&
                          report.uncertainty_best == report.centroid_best;

    // Narrative lines.
    for (const auto& entry : report.entries) {
        if (entry.degenerate) {
            report.summary.push_back(
                "system '" + entry.name +
                "' is degenerate: not assessable under the possibilistic model; "
                "centroids reported anyway");
        }
    }
    if (report.uncertainty_best) {
        report.summary.push_back("possibilistic model: lowest total uncertainty is '" +
                                 report.entries[*report.uncertainty_best].name + "'");
    } else {
        report.summary.push_back(
            "possibilistic model: no unique winner (tied or not assessable)");
    }
    for (std::size_t s = 0; s < kStepCount; ++s) {
        const std::string step{step_name(static_cast<Step>(s))};
        if (report.step_winners[s]) {
            report.summary.push_back("centroid model, " + step + ": '" +
                                     report.entries[*report.step_winners[s]].name +
                                     "' ahead");
        } else {
            report.summary.push_back("centroid model, " + step + ": tied");
        }
    }
    if (report.centroid_best) {
        report.summary.push_back("centroid model: most step wins for '" +
                                 report.entries[*report.centroid_best].name + "'");
    } else {
        report.summary.push_back("centroid model: no overall winner (tied steps)");
    }
    report.summary.push_back(report.models_agree
                                 ? "the two models agree on the best system"
                                 : "the two models do not agree on the best system");
    return report;
}

} // namespace cbreval
