#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace cbreval {

// Linguistic degree of success for one CBR step, lowest to highest:
// negligible, low, intermediate, high, complete. The order is total.
enum class Grade : std::uint8_t { a = 0, b, c, d, e };

inline constexpr std::size_t kGradeCount = 5;

inline constexpr std::array<Grade, kGradeCount> kAllGrades = {
    Grade::a, Grade::b, Grade::c, Grade::d, Grade::e};

// 1-based bar position of a grade on the score axis.
constexpr int bar_index(Grade g) {
    return static_cast<int>(g) + 1;
}

// Midpoint of the unit-width bar for a grade: 0.5, 1.5, 2.5, 3.5, 4.5.
constexpr double bar_midpoint(Grade g) {
    return (2.0 * bar_index(g) - 1.0) / 2.0;
}

constexpr char grade_token(Grade g) {
    return static_cast<char>('a' + static_cast<int>(g));
}

constexpr std::string_view grade_name(Grade g) {
    constexpr std::array<std::string_view, kGradeCount> names = {
        "negligible", "low", "intermediate", "high", "complete"};
    return names[static_cast<std::size_t>(g)];
}

inline std::optional<Grade> parse_grade(std::string_view token) {
    if (token.size() != 1 || token[0] < 'a' || token[0] > 'e') {
        return std::nullopt;
    }
    return static_cast<Grade>(token[0] - 'a');
}

} // namespace cbreval
