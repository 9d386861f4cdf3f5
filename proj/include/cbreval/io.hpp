#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cbreval/assessment.hpp"
#include "cbreval/case_log.hpp"
#include "cbreval/cbr_sim.hpp"
#include "cbreval/errors.hpp"
#include "cbreval/grade.hpp"
#include "cbreval/step_distribution.hpp"

namespace cbreval {

namespace detail {

inline nlohmann::json parse_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'");
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("'" + path.string() + "': " + e.what());
    }
}

inline const nlohmann::json& require_key(const nlohmann::json& obj, const char* key,
                                         const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw ParseError(where + ": missing key '" + key + "'");
    }
    return obj.at(key);
}

inline std::uint32_t read_count(const nlohmann::json& value, const std::string& where) {
    if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
        throw ParseError(where + ": counts must be non-negative integers");
    }
    return static_cast<std::uint32_t>(value.get<std::int64_t>());
}

inline GradeCounts read_grade_counts(const nlohmann::json& obj, const std::string& where) {
    GradeCounts counts{};
    for (Grade g : kAllGrades) {
        const std::string key(1, grade_token(g));
        counts[static_cast<std::size_t>(g)] =
            read_count(require_key(obj, key.c_str(), where), where + "." + key);
    }
    return counts;
}

} // namespace detail

// --- system record files -------------------------------------------------
// {"name": str, "cases": int, "steps": {"retrieve": {"a":int,...,"e":int},
//  "reuse": {...}, "revise": {...}}}

inline SystemRecord system_record_from_json(const nlohmann::json& j) {
    const auto& name_j = detail::require_key(j, "name", "record");
    if (!name_j.is_string()) {
        throw ParseError("record: 'name' must be a string");
    }
    const auto& cases_j = detail::require_key(j, "cases", "record");
    if (!cases_j.is_number_integer() || cases_j.get<std::int64_t>() < 0) {
        throw ParseError("record: 'cases' must be a non-negative integer");
    }
    const auto& steps = detail::require_key(j, "steps", "record");
    SystemRecord record = make_system_record(
        name_j.get<std::string>(),
        detail::read_grade_counts(detail::require_key(steps, "retrieve", "steps"),
                                  "steps.retrieve"),
        detail::read_grade_counts(detail::require_key(steps, "reuse", "steps"),
                                  "steps.reuse"),
        detail::read_grade_counts(detail::require_key(steps, "revise", "steps"),
                                  "steps.revise"));
    const auto declared = cases_j.get<std::uint64_t>();
    if (declared != record.cases) {
        throw InvalidSystemError("record '" + record.name + "': declares " +
                                 std::to_string(declared) + " cases but steps tally " +
                                 std::to_string(record.cases));
    }
    return record;
}

inline nlohmann::ordered_json system_record_to_json(const SystemRecord& record) {
    nlohmann::ordered_json j;
    j["name"] = record.name;
    j["cases"] = record.cases;
    nlohmann::ordered_json steps;
    for (const auto& dist : record.steps) {
        nlohmann::ordered_json counts;
        for (Grade g : kAllGrades) {
            counts[std::string(1, grade_token(g))] =
                dist.counts[static_cast<std::size_t>(g)];
        }
        steps[std::string(step_name(dist.step))] = std::move(counts);
    }
    j["steps"] = std::move(steps);
    return j;
}

inline SystemRecord load_system_record(const std::filesystem::path& path) {
    return system_record_from_json(detail::parse_json_file(path));
}

inline void save_system_record(const SystemRecord& record,
                               const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot write '" + path.string() + "'");
    }
    out << system_record_to_json(record).dump(2) << '\n';
}

// --- case log files (CSV) -------------------------------------------------
// header: case_id,retrieve_grade,reuse_grade,revise_grade
// grade tokens a..e, LF or CRLF line endings.

inline constexpr const char* kCaseLogHeader =
    "case_id,retrieve_grade,reuse_grade,revise_grade";

namespace detail {

inline std::vector<std::string> split_csv_row(std::string line) {
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

inline Grade parse_grade_field(const std::string& token, std::size_t row) {
    const auto grade = parse_grade(token);
    if (!grade) {
        throw ParseError("row " + std::to_string(row) + ": bad grade token '" + token +
                         "'");
    }
    return *grade;
}

} // namespace detail

inline std::vector<CaseLogEntry> parse_case_log(std::istream& in) {
    std::string line;
    std::size_t row = 0;
    if (!std::getline(in, line)) {
        throw ParseError("case log is empty, expected header '" +
                         std::string(kCaseLogHeader) + "'");
    }
    ++row;
    if (detail::split_csv_row(line) != detail::split_csv_row(kCaseLogHeader)) {
        throw ParseError("row 1: expected header '" + std::string(kCaseLogHeader) + "'");
    }
    std::vector<CaseLogEntry> entries;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line == "\r") {
            continue;
        }
        const auto fields = detail::split_csv_row(line);
        if (fields.size() != 4) {
            throw ParseError("row " + std::to_string(row) + ": expected 4 fields, got " +
                             std::to_string(fields.size()));
        }
        if (fields[0].empty()) {
            throw ParseError("row " + std::to_string(row) + ": empty case_id");
        }
        entries.push_back({fields[0], detail::parse_grade_field(fields[1], row),
                           detail::parse_grade_field(fields[2], row),
                           detail::parse_grade_field(fields[3], row)});
    }
    return entries;
}

inline std::vector<CaseLogEntry> load_case_log(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'");
    }
    return parse_case_log(in);
}

inline void write_case_log(std::span<const CaseLogEntry> entries, std::ostream& out) {
    out << kCaseLogHeader << '\n';
    for (const auto& e : entries) {
        if (e.case_id.find_first_of(",\r\n") != std::string::npos) {
            throw ParseError("case id '" + e.case_id + "' contains a separator");
        }
        out << e.case_id << ',' << grade_token(e.retrieve_grade) << ','
            << grade_token(e.reuse_grade) << ',' << grade_token(e.revise_grade) << '\n';
    }
}

inline void save_case_log(std::span<const CaseLogEntry> entries,
                          const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot write '" + path.string() + "'");
    }
    write_case_log(entries, out);
}

// --- simulator input files --------------------------------------------------
// library:  {"dim": int, "cases": [{"id": str, "features": [...], "solution": real}]}
// problems: {"problems": [{"features": [...], "truth": real}]}

namespace detail {

inline std::vector<double> read_feature_vector(const nlohmann::json& j,
                                               const std::string& where) {
    if (!j.is_array()) {
        throw ParseError(where + ": 'features' must be an array of numbers");
    }
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number()) {
            throw ParseError(where + ": 'features' must be an array of numbers");
        }
        out.push_back(v.get<double>());
    }
    return out;
}

} // namespace detail

inline CaseLibrary library_from_json(const nlohmann::json& j) {
    const auto& dim_j = detail::require_key(j, "dim", "library");
    if (!dim_j.is_number_integer() || dim_j.get<std::int64_t>() <= 0) {
        throw ParseError("library: 'dim' must be a positive integer");
    }
    CaseLibrary library(dim_j.get<std::size_t>());
    const auto& cases = detail::require_key(j, "cases", "library");
    if (!cases.is_array()) {
        throw ParseError("library: 'cases' must be an array");
    }
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const std::string where = "library.cases[" + std::to_string(i) + "]";
        const auto& c = cases[i];
        const auto& id = detail::require_key(c, "id", where);
        if (!id.is_string()) {
            throw ParseError(where + ": 'id' must be a string");
        }
        const auto& solution = detail::require_key(c, "solution", where);
        if (!solution.is_number()) {
            throw ParseError(where + ": 'solution' must be a number");
        }
        library.add(Case{id.get<std::string>(),
                         detail::read_feature_vector(
                             detail::require_key(c, "features", where), where),
                         solution.get<double>(), std::nullopt});
    }
    return library;
}

inline nlohmann::ordered_json library_to_json(const CaseLibrary& library) {
    nlohmann::ordered_json j;
    j["dim"] = library.feature_dim();
    nlohmann::ordered_json cases = nlohmann::ordered_json::array();
    for (const auto& c : library.cases()) {
        nlohmann::ordered_json cj;
        cj["id"] = c.id;
        cj["features"] = c.features;
        cj["solution"] = c.solution;
        cases.push_back(std::move(cj));
    }
    j["cases"] = std::move(cases);
    return j;
}

inline CaseLibrary load_library(const std::filesystem::path& path) {
    return library_from_json(detail::parse_json_file(path));
}

inline void save_library(const CaseLibrary& library, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot write '" + path.string() + "'");
    }
    out << library_to_json(library).dump(2) << '\n';
}

inline std::vector<Problem> problems_from_json(const nlohmann::json& j) {
    const auto& list = detail::require_key(j, "problems", "problems");
    if (!list.is_array()) {
        throw ParseError("problems: 'problems' must be an array");
    }
    std::vector<Problem> out;
    out.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string where = "problems[" + std::to_string(i) + "]";
        const auto& p = list[i];
        const auto& truth = detail::require_key(p, "truth", where);
        if (!truth.is_number()) {
            throw ParseError(where + ": 'truth' must be a number");
        }
        out.push_back(Problem{detail::read_feature_vector(
                                  detail::require_key(p, "features", where), where),
                              truth.get<double>()});
    }
    return out;
}

inline std::vector<Problem> load_problems(const std::filesystem::path& path) {
    return problems_from_json(detail::parse_json_file(path));
}

} // namespace cbreval
