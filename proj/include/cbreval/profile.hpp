#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cbreval/errors.hpp"
#include "cbreval/grade.hpp"
#include "cbreval/step_distribution.hpp"

namespace cbreval {

// Overall state of a case during the CBR cycle: the success grades reached
// at retrieval, reuse and revision.
struct Profile {
    Grade retrieve = Grade::a;
    Grade reuse = Grade::a;
    Grade revise = Grade::a;

    friend constexpr bool operator==(const Profile&, const Profile&) = default;
};

inline constexpr std::size_t kProfileCount = kGradeCount * kGradeCount * kGradeCount;

// A profile is well ordered when its grades never increase along the cycle:
// a step cannot succeed beyond what the step before it achieved.
constexpr bool is_well_ordered(const Profile& p) {
    return p.retrieve >= p.reuse && p.reuse >= p.revise;
}

// Profile at position `index` in the canonical enumeration order:
// lexicographic over (retrieve, reuse, revise) with grade order a..e and
// retrieve varying slowest.
constexpr Profile profile_at(std::size_t index) {
    return Profile{static_cast<Grade>(index / (kGradeCount * kGradeCount)),
                   static_cast<Grade>((index / kGradeCount) % kGradeCount),
                   static_cast<Grade>(index % kGradeCount)};
}

inline std::string format_profile(const Profile& p) {
    return std::string("(") + grade_token(p.retrieve) + "," + grade_token(p.reuse) +
           "," + grade_token(p.revise) + ")";
}

// Membership of a profile: the product of the three per-step memberships for
// well-ordered profiles, zero otherwise.
inline double profile_membership(const StepDistributions& dists, const Profile& p) {
    if (!is_well_ordered(p)) {
        return 0.0;
    }
    return dists[0].membership(p.retrieve) * dists[1].membership(p.reuse) *
           dists[2].membership(p.revise);
}

struct ProfileEntry {
    Profile profile;
    double membership = 0.0;
};

// All 125 profiles with their memberships, in canonical enumeration order.
inline std::vector<ProfileEntry> enumerate_profiles(const StepDistributions& dists) {
    std::vector<ProfileEntry> out;
    out.reserve(kProfileCount);
    for (std::size_t i = 0; i < kProfileCount; ++i) {
        const Profile p = profile_at(i);
        out.push_back({p, profile_membership(dists, p)});
    }
    return out;
}

// A profile together with its membership and its possibility, the membership
// rescaled by the maximal one.
struct ProfileAnalysis {
    Profile profile;
    double membership = 0.0;
    double possibility = 0.0;
};

// Rescales memberships into possibilities. The order of the input is
// preserved; maximal-membership profiles get possibility exactly 1 (ties
// allowed). A system admitting no well-ordered outcome has an all-zero
// membership table and no possibility distribution.
inline std::vector<ProfileAnalysis> possibility_distribution(
    std::span<const ProfileEntry> entries) {
    double max_membership = 0.0;
    for (const auto& e : entries) {
        max_membership = std::max(max_membership, e.membership);
    }
    if (max_membership <= 0.0) {
        throw DegenerateSystemError(
            "all profile memberships are zero: the system admits no "
            "well-ordered outcome");
    }
    std::vector<ProfileAnalysis> out;
    out.reserve(entries.size());
    for (const auto& e : entries) {
        out.push_back({e.profile, e.membership, e.membership / max_membership});
    }
    return out;
}

} // namespace cbreval
