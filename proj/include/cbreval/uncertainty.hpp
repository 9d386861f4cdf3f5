#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cbreval/errors.hpp"
#include "cbreval/profile.hpp"

namespace cbreval {

// Possibility values sorted into non-increasing order, r1 >= r2 >= ... >= rk,
// with r1 = 1. This is the form the uncertainty measures are defined on.
class OrderedPossibilityDistribution {
public:
    static constexpr double kNormalizationTolerance = 1e-9;

    explicit OrderedPossibilityDistribution(std::vector<double> values)
        : values_(std::move(values)) {
        if (values_.empty()) {
            throw InvalidDistributionError("possibility distribution is empty");
        }
        std::sort(values_.begin(), values_.end(), std::greater<double>());
        if (std::abs(values_.front() - 1.0) > kNormalizationTolerance) {
            throw InvalidDistributionError(
                "largest possibility must be 1, got " +
                std::to_string(values_.front()));
        }
        if (values_.back() < 0.0) {
            throw InvalidDistributionError("possibility values must be non-negative");
        }
    }

    static OrderedPossibilityDistribution from_analyses(
        std::span<const ProfileAnalysis> analyses) {
        std::vector<double> values;
        values.reserve(analyses.size());
        for (const auto& a : analyses) {
            values.push_back(a.possibility);
        }
        return OrderedPossibilityDistribution(std::move(values));
    }

    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }

private:
    std::vector<double> values_;
};

// Nonspecificity N(r) = sum_{i=2..k} (r_i - r_{i+1}) * log2(i), r_{k+1} = 0.
// Zero for a crisp distribution, log2(k) for uniform possibility over k
// outcomes; measured in bits.
inline double nonspecificity(const OrderedPossibilityDistribution& dist) {
    const auto& r = dist.values();
    const std::size_t k = r.size();
    double sum = 0.0;
    for (std::size_t i = 2; i <= k; ++i) {
        const double next = (i < k) ? r[i] : 0.0;
        sum += (r[i - 1] - next) * std::log2(static_cast<double>(i));
    }
    return sum;
}

// Strife ST(r) = sum_{i=2..k} (r_i - r_{i+1}) * log2(i / sum_{j=1..i} r_j),
// r_{k+1} = 0. The conflict among overlapping possible outcomes, in bits.
inline double strife(const OrderedPossibilityDistribution& dist) {
    const auto& r = dist.values();
    const std::size_t k = r.size();
    double sum = 0.0;
    double prefix = r[0];
    for (std::size_t i = 2; i <= k; ++i) {
        prefix += r[i - 1];
        const double next = (i < k) ? r[i] : 0.0;
        sum += (r[i - 1] - next) * std::log2(static_cast<double>(i) / prefix);
    }
    return sum;
}

struct UncertaintyResult {
    double nonspecificity = 0.0;
    double strife = 0.0;
    double total = 0.0;
};

// Total possibilistic uncertainty: nonspecificity plus strife. Lower total
// means the system resolves more of its uncertainty while working a case.
inline UncertaintyResult total_uncertainty(const OrderedPossibilityDistribution& dist) {
    UncertaintyResult out;
    out.nonspecificity = nonspecificity(dist);
    out.strife = strife(dist);
    out.total = out.nonspecificity + out.strife;
    return out;
}

struct RankedUncertainty {
    std::string name;
    UncertaintyResult result;
    int rank = 0;
};

// Ranks systems ascending by total uncertainty (lower is better). Equal
// totals share a rank; the next distinct total takes the rank it would have
// with the tied block counted.
inline std::vector<RankedUncertainty> rank_by_uncertainty(
    std::vector<std::pair<std::string, UncertaintyResult>> systems) {
    std::sort(systems.begin(), systems.end(), [](const auto& a, const auto& b) {
        if (a.second.total != b.second.total) {
            return a.second.total < b.second.total;
        }
        return a.first < b.first;
    });
    std::vector<RankedUncertainty> out;
    out.reserve(systems.size());
    for (std::size_t i = 0; i < systems.size(); ++i) {
        int rank = static_cast<int>(i) + 1;
        if (i > 0 && systems[i].second.total == systems[i - 1].second.total) {
            rank = out.back().rank;
        }
        out.push_back({std::move(systems[i].first), systems[i].second, rank});
    }
    return out;
}

} // namespace cbreval
