#pragma once

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cbreval/assessment.hpp"
#include "cbreval/centroid.hpp"

namespace cbreval {

namespace detail {

// Text reports display 3 decimals; the JSON form keeps full precision.
inline std::string fixed3(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", value);
    return buf;
}

inline std::string profile_key(const Profile& p) {
    return std::string{grade_token(p.retrieve), grade_token(p.reuse),
                       grade_token(p.revise)};
}

inline nlohmann::ordered_json centroid_json(const Centroid& c) {
    return {{"x_c", c.x}, {"y_c", c.y}};
}

inline nlohmann::ordered_json uncertainty_json(const UncertaintyResult& u) {
    return {{"nonspecificity", u.nonspecificity},
            {"strife", u.strife},
            {"total_uncertainty", u.total}};
}

// Profile table rows sorted by descending possibility, enumeration order
// within equal possibility.
inline std::vector<std::size_t> profile_display_order(
    const std::vector<ProfileAnalysis>& profiles) {
    std::vector<std::size_t> order(profiles.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return profiles[a].possibility > profiles[b].possibility;
    });
    return order;
}

} // namespace detail

inline std::string render_assessment_text(const AssessmentResult& result,
                                          bool include_profiles = false) {
    std::ostringstream out;
    out << "System: " << result.name << "\n";
    out << "Cases:  " << result.cases << "\n";
    out << "Step grade counts (a b c d e):\n";
    for (const auto& dist : result.steps) {
        out << "  " << step_name(dist.step) << ":";
        for (auto count : dist.counts) {
            out << ' ' << count;
        }
        out << "\n";
    }
    out << "Retention: crisp, every worked case is retained (no distribution).\n";
    out << "Possibilistic model:\n";
    out << "  max membership profile: " << format_profile(result.max_membership_profile)
        << "  membership = " << detail::fixed3(result.max_membership) << "\n";
    out << "  nonspecificity = " << detail::fixed3(result.uncertainty.nonspecificity)
        << " bits\n";
    out << "  strife = " << detail::fixed3(result.uncertainty.strife) << " bits\n";
    out << "  T(r) = " << detail::fixed3(result.uncertainty.total) << " bits\n";
    out << "Centroid model (x_c, y_c):\n";
    for (std::size_t i = 0; i < kStepCount; ++i) {
        out << "  " << step_name(static_cast<Step>(i)) << ": ("
            << detail::fixed3(result.centroids[i].x) << ", "
            << detail::fixed3(result.centroids[i].y) << ")\n";
    }
    if (include_profiles) {
        out << "Profiles (by descending possibility):\n";
        for (std::size_t idx : detail::profile_display_order(result.profiles)) {
            const auto& p = result.profiles[idx];
            out << "  " << format_profile(p.profile)
                << "  membership = " << detail::fixed3(p.membership)
                << "  possibility = " << detail::fixed3(p.possibility) << "\n";
        }
    }
    return out.str();
}

inline nlohmann::ordered_json assessment_to_json(const AssessmentResult& result) {
    nlohmann::ordered_json j;
    j["name"] = result.name;
    j["cases"] = result.cases;
    nlohmann::ordered_json steps;
    for (std::size_t i = 0; i < kStepCount; ++i) {
        const auto& dist = result.steps[i];
        nlohmann::ordered_json sj;
        nlohmann::ordered_json counts;
        for (Grade g : kAllGrades) {
            counts[std::string(1, grade_token(g))] =
                dist.counts[static_cast<std::size_t>(g)];
        }
        sj["counts"] = std::move(counts);
        sj["memberships"] = dist.memberships();
        sj["centroid"] = detail::centroid_json(result.centroids[i]);
        steps[std::string(step_name(dist.step))] = std::move(sj);
    }
    j["steps"] = std::move(steps);
    j["retention"] = "crisp";
    nlohmann::ordered_json poss;
    poss["max_membership_profile"] = detail::profile_key(result.max_membership_profile);
    poss["max_membership"] = result.max_membership;
    poss["nonspecificity"] = result.uncertainty.nonspecificity;
    poss["strife"] = result.uncertainty.strife;
    poss["total_uncertainty"] = result.uncertainty.total;
    nlohmann::ordered_json profiles = nlohmann::ordered_json::array();
    for (const auto& p : result.profiles) {
        profiles.push_back({{"profile", detail::profile_key(p.profile)},
                            {"membership", p.membership},
                            {"possibility", p.possibility}});
    }
    poss["profiles"] = std::move(profiles);
    j["possibilistic"] = std::move(poss);
    return j;
}

inline std::string render_comparison_text(const ComparisonReport& report) {
    std::ostringstream out;
    out << "Comparison of " << report.entries.size() << " systems\n";
    for (const auto& entry : report.entries) {
        out << "System " << entry.name << " (" << entry.cases << " cases): ";
        if (entry.uncertainty) {
            out << "T(r) = " << detail::fixed3(entry.uncertainty->total) << " bits";
        } else {
            out << "possibilistic model not applicable (degenerate)";
        }
        out << "\n";
        for (std::size_t i = 0; i < kStepCount; ++i) {
            out << "  " << step_name(static_cast<Step>(i)) << ": ("
                << detail::fixed3(entry.centroids[i].x) << ", "
                << detail::fixed3(entry.centroids[i].y) << ")\n";
        }
    }
    out << "Uncertainty ranking (lower T(r) is better):\n";
    if (report.uncertainty_ranking.empty()) {
        out << "  (no assessable systems)\n";
    }
    for (const auto& ranked : report.uncertainty_ranking) {
        out << "  " << ranked.rank << ". " << ranked.name
            << "  T(r) = " << detail::fixed3(ranked.result.total) << " bits\n";
    }
    out << "Per-step centroid outcomes:\n";
    for (const auto& pair : report.pairwise) {
        for (std::size_t s = 0; s < kStepCount; ++s) {
            out << "  " << report.entries[pair.first].name << " vs "
                << report.entries[pair.second].name << ", "
                << step_name(static_cast<Step>(s)) << ": "
                << centroid_outcome_name(pair.outcomes[s]) << "\n";
        }
    }
    out << "Models agree: " << (report.models_agree ? "yes" : "no") << "\n";
    out << "Summary:\n";
    for (const auto& line : report.summary) {
        out << "  - " << line << "\n";
    }
    return out.str();
}

inline nlohmann::ordered_json comparison_to_json(const ComparisonReport& report) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json systems = nlohmann::ordered_json::array();
    for (const auto& entry : report.entries) {
        nlohmann::ordered_json sj;
        sj["name"] = entry.name;
        sj["cases"] = entry.cases;
        sj["degenerate"] = entry.degenerate;
        if (entry.uncertainty) {
            sj["uncertainty"] = detail::uncertainty_json(*entry.uncertainty);
        } else {
            sj["uncertainty"] = nullptr;
        }
        nlohmann::ordered_json centroids;
        for (std::size_t i = 0; i < kStepCount; ++i) {
            centroids[std::string(step_name(static_cast<Step>(i)))] =
                detail::centroid_json(entry.centroids[i]);
        }
        sj["centroids"] = std::move(centroids);
        if (entry.degenerate) {
            sj["profiles"] = nullptr;
        } else {
            nlohmann::ordered_json profiles = nlohmann::ordered_json::array();
            for (const auto& p : entry.profiles) {
                profiles.push_back({{"profile", detail::profile_key(p.profile)},
                                    {"membership", p.membership},
                                    {"possibility", p.possibility}});
            }
            sj["profiles"] = std::move(profiles);
        }
        systems.push_back(std::move(sj));
    }
    j["systems"] = std::move(systems);
    nlohmann::ordered_json ranking = nlohmann::ordered_json::array();
    for (const auto& ranked : report.uncertainty_ranking) {
        nlohmann::ordered_json rj;
        rj["rank"] = ranked.rank;
        rj["name"] = ranked.name;
        rj["total_uncertainty"] = ranked.result.total;
        ranking.push_back(std::move(rj));
    }
    j["uncertainty_ranking"] = std::move(ranking);
    nlohmann::ordered_json pairwise = nlohmann::ordered_json::array();
    for (const auto& pair : report.pairwise) {
        nlohmann::ordered_json pj;
        pj["first"] = report.entries[pair.first].name;
        pj["second"] = report.entries[pair.second].name;
        nlohmann::ordered_json outcomes;
        for (std::size_t s = 0; s < kStepCount; ++s) {
            outcomes[std::string(step_name(static_cast<Step>(s)))] =
                centroid_outcome_name(pair.outcomes[s]);
        }
        pj["outcomes"] = std::move(outcomes);
        pairwise.push_back(std::move(pj));
    }
    j["pairwise"] = std::move(pairwise);
    nlohmann::ordered_json winners;
    for (std::size_t s = 0; s < kStepCount; ++s) {
        const std::string step{step_name(static_cast<Step>(s))};
        if (report.step_winners[s]) {
            winners[step] = report.entries[*report.step_winners[s]].name;
        } else {
            winners[step] = nullptr;
        }
    }
    j["step_winners"] = std::move(winners);
    j["uncertainty_best"] = report.uncertainty_best
                                ? nlohmann::ordered_json(
                                      report.entries[*report.uncertainty_best].name)
                                : nlohmann::ordered_json(nullptr);
    j["centroid_best"] =
        report.centroid_best
            ? nlohmann::ordered_json(report.entries[*report.centroid_best].name)
            : nlohmann::ordered_json(nullptr);
    j["models_agree"] = report.models_agree;
    j["summary"] = report.summary;
    return j;
}

} // namespace cbreval
