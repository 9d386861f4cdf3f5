#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "cbreval/errors.hpp"

namespace cbreval {

// Bar-graph figure: bar i (1-based) spans [i-1, i] on the score axis with
// height heights[i-1]. Five bars for grade histograms, but the centroid
// formulas hold for any bar count.
struct BarDistribution {
    std::vector<double> heights;
    bool normalized = false;
};

// Center of mass of the bar figure.
struct Centroid {
    double x = 0.0;
    double y = 0.0;
};

inline constexpr double kCentroidCompareTolerance = 1e-9;

namespace detail {

inline double bar_mass(const BarDistribution& bars) {
    double sum = 0.0;
    for (double h : bars.heights) {
        if (h < 0.0) {
            throw RangeError("bar heights must be non-negative");
        }
        sum += h;
    }
    if (sum <= 0.0) {
        throw EmptyFigureError("bar figure has no positive mass");
    }
    return sum;
}

} // namespace detail

// Rescales heights to unit total mass.
inline BarDistribution normalize(const BarDistribution& bars) {
    const double sum = detail::bar_mass(bars);
    BarDistribution out;
    out.heights.reserve(bars.heights.size());
    for (double h : bars.heights) {
        out.heights.push_back(h / sum);
    }
    out.normalized = true;
    return out;
}

// Centroid of a bar figure with heights taken as given (no normalization):
//   x_c = (1/2) * sum (2i-1) y_i / sum y_i
//   y_c = (1/2) * sum y_i^2   / sum y_i
inline Centroid centroid_bars_general(std::span<const double> heights) {
    BarDistribution view{{heights.begin(), heights.end()}, false};
    const double sum = detail::bar_mass(view);
    double weighted = 0.0;
    double squares = 0.0;
    for (std::size_t i = 0; i < heights.size(); ++i) {
        weighted += (2.0 * static_cast<double>(i + 1) - 1.0) * heights[i];
        squares += heights[i] * heights[i];
    }
    return Centroid{0.5 * weighted / sum, 0.5 * squares / sum};
}

// Centroid of the figure after normalizing the heights to sum 1. This is the
// assessment-facing form: raw counts and their normalized fractions yield the
// same point.
inline Centroid centroid_bars(const BarDistribution& bars) {
    const BarDistribution unit = normalize(bars);
    return centroid_bars_general(unit.heights);
}

// Centroid via direct numeric evaluation of the defining area integrals
//   x_c = (integral of x dA) / (integral of dA)
//   y_c = (integral of y dA) / (integral of dA)
// over the normalized bar figure, midpoint rule with cells_per_bar cells per
// bar. Independent route kept alongside the closed form so the two can be
// checked against each other.
inline Centroid centroid_integral_oracle(const BarDistribution& bars,
                                         std::size_t cells_per_bar = 10000) {
    const BarDistribution unit = normalize(bars);
    const std::size_t grid =
        static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(cells_per_bar))));
    double area = 0.0;
    double moment_x = 0.0;
    double moment_y = 0.0;
    for (std::size_t i = 0; i < unit.heights.size(); ++i) {
        const double height = unit.heights[i];
        if (height <= 0.0) {
            continue;
        }
        const double x0 = static_cast<double>(i);
        const double dx = 1.0 / static_cast<double>(grid);
        const double dy = height / static_cast<double>(grid);
        const double cell = dx * dy;
        for (std::size_t ix = 0; ix < grid; ++ix) {
            const double x_mid = x0 + (static_cast<double>(ix) + 0.5) * dx;
            for (std::size_t iy = 0; iy < grid; ++iy) {
                const double y_mid = (static_cast<double>(iy) + 0.5) * dy;
                area += cell;
                moment_x += x_mid * cell;
                moment_y += y_mid * cell;
            }
        }
    }
    return Centroid{moment_x / area, moment_y / area};
}

enum class CentroidOutcome { first_better, second_better, tie };

// Lexicographic comparison of two centroids from normalized five-bar figures:
// the larger x_c wins; on equal x_c the y_c direction flips around x_c = 2.5
// (above it more concentration is better, below it less), with x_c exactly
// 2.5 resolved toward the higher y_c.
inline CentroidOutcome compare_centroid(const Centroid& a, const Centroid& b) {
    if (a.x > b.x + kCentroidCompareTolerance) {
        return CentroidOutcome::first_better;
    }
    if (b.x > a.x + kCentroidCompareTolerance) {
        return CentroidOutcome::second_better;
    }
    if (std::abs(a.y - b.y) <= kCentroidCompareTolerance) {
        return CentroidOutcome::tie;
    }
    const double x_shared = 0.5 * (a.x + b.x);
    const bool higher_y_wins = x_shared >= 2.5 - kCentroidCompareTolerance;
    if (higher_y_wins) {
        return a.y > b.y ? CentroidOutcome::first_better : CentroidOutcome::second_better;
    }
    return a.y < b.y ? CentroidOutcome::first_better : CentroidOutcome::second_better;
}

constexpr const char* centroid_outcome_name(CentroidOutcome o) {
    switch (o) {
    case CentroidOutcome::first_better:
        return "first-better";
    case CentroidOutcome::second_better:
        return "second-better";
    case CentroidOutcome::tie:
        return "tie";
    }
    return "tie";
}

} // namespace cbreval
