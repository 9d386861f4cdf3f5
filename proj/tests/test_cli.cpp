#include "doctest.h"

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "cbreval/cbreval.hpp"

#include "support/cli_runner.hpp"
#include "support/fixtures.hpp"

using namespace cbreval;
using testcli::read_file;
using testcli::run_cli;
using testcli::scratch_dir;
using testcli::write_file;

namespace {

std::string data_file(const std::string& name) {
    return (std::filesystem::path(CBREVAL_DATA_DIR) / name).string();
}

std::string quoted(const std::filesystem::path& p) {
    return "\"" + p.string() + "\"";
}

// CSV with the reference system-1 tallies: step columns are filled
// independently, which keeps the marginal counts right.
std::string system1_csv() {
    auto expand = [](const GradeCounts& counts) {
        std::vector<char> tokens;
        for (std::size_t g = 0; g < kGradeCount; ++g) {
            for (std::uint32_t i = 0; i < counts[g]; ++i) {
                tokens.push_back(static_cast<char>('a' + g));
            }
        }
        return tokens;
    };
    const auto record = testfx::system1();
    const auto r = expand(record.steps[0].counts);
    const auto u = expand(record.steps[1].counts);
    const auto v = expand(record.steps[2].counts);
    std::string csv = "case_id,retrieve_grade,reuse_grade,revise_grade\n";
    for (std::size_t i = 0; i < r.size(); ++i) {
        csv += "case-" + std::to_string(i + 1) + "," + r[i] + "," + u[i] + "," + v[i] +
               "\n";
    }
    return csv;
}

} // namespace

TEST_CASE("assess: text report on the reference fixture") {
    const auto result = run_cli("assess --input " + data_file("system1.json"));
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("System: system-1") != std::string::npos);
    CHECK(result.out.find("T(r) = 3.060 bits") != std::string::npos);
    CHECK(result.out.find("(c,c,c)") != std::string::npos);
    CHECK(result.err.empty());
    // profile table only with --profiles
    CHECK(result.out.find("Profiles") == std::string::npos);

    const auto with_profiles =
        run_cli("assess --input " + data_file("system1.json") + " --profiles");
    CHECK(with_profiles.exit_code == 0);
    CHECK(with_profiles.out.find("Profiles") != std::string::npos);
}

TEST_CASE("assess: JSON report carries full precision") {
    const auto result =
        run_cli("assess --input " + data_file("system1.json") + " --format json");
    REQUIRE(result.exit_code == 0);
    const auto j = nlohmann::json::parse(result.out);
    const auto expected = assess_system(testfx::system1());
    CHECK(j["possibilistic"]["total_uncertainty"].get<double>() ==
          expected.uncertainty.total);
    CHECK(j["possibilistic"]["profiles"].size() == kProfileCount);
    CHECK(j["name"] == "system-1");
}

TEST_CASE("assess: JSON output matches the golden file byte for byte") {
    const auto record_path = scratch_dir() / "ideal.json";
    write_file(record_path, R"({
  "name": "ideal",
  "cases": 2,
  "steps": {
    "retrieve": {"a": 0, "b": 0, "c": 0, "d": 0, "e": 2},
    "reuse": {"a": 0, "b": 0, "c": 0, "d": 0, "e": 2},
    "revise": {"a": 0, "b": 0, "c": 0, "d": 0, "e": 2}
  }
})");
    const auto result =
        run_cli("assess --input " + quoted(record_path) + " --format json");
    REQUIRE(result.exit_code == 0);
    const auto golden = read_file(std::filesystem::path(CBREVAL_GOLDEN_DIR) /
                                  "assess_ideal.json");
    REQUIRE_FALSE(golden.empty());
    CHECK(result.out == golden);
}

TEST_CASE("assess: invalid inputs exit 1") {
    const auto missing = run_cli("assess --input /nonexistent/record.json");
    CHECK(missing.exit_code == 1);
    CHECK_FALSE(missing.err.empty());

    const auto malformed_path = scratch_dir() / "malformed.json";
    write_file(malformed_path, "{not json");
    const auto malformed = run_cli("assess --input " + quoted(malformed_path));
    CHECK(malformed.exit_code == 1);
    CHECK_FALSE(malformed.err.empty());

    const auto unknown = run_cli("assess --input " + data_file("system1.json") +
                                 " --bogus-flag");
    CHECK(unknown.exit_code == 1);

    const auto no_subcommand = run_cli("");
    CHECK(no_subcommand.exit_code == 1);
}

TEST_CASE("assess: degenerate system exits 2") {
    const auto result = run_cli("assess --input " + data_file("degenerate.json"));
    CHECK(result.exit_code == 2);
    CHECK(result.err.find("well-ordered") != std::string::npos);
}

TEST_CASE("compare: reference pair disagrees but exits 0") {
    const auto result = run_cli("compare --a " + data_file("system1.json") + " --b " +
                                data_file("system2.json") + " --format json");
    REQUIRE(result.exit_code == 0);
    const auto j = nlohmann::json::parse(result.out);
    CHECK(j["models_agree"] == false);
    CHECK(j["uncertainty_best"] == "system-2");
    CHECK(j["centroid_best"] == "system-1");

    const auto text = run_cli("compare --a " + data_file("system1.json") + " --b " +
                              data_file("system2.json"));
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("Models agree: no") != std::string::npos);
}

TEST_CASE("compare: identical files tie and exit 0") {
    const auto result = run_cli("compare --a " + data_file("system1.json") + " --b " +
                                data_file("system1.json") + " --format json");
    REQUIRE(result.exit_code == 0);
    const auto j = nlohmann::json::parse(result.out);
    CHECK(j["models_agree"] == false);
    CHECK(j["uncertainty_best"].is_null());
    CHECK(j["centroid_best"].is_null());
}

TEST_CASE("compare: missing file exits 1") {
    const auto result = run_cli("compare --a " + data_file("system1.json") +
                                " --b /nonexistent.json");
    CHECK(result.exit_code == 1);
}

TEST_CASE("ingest: tallies a log into a byte-stable record") {
    const auto log_path = scratch_dir() / "system1.csv";
    write_file(log_path, system1_csv());
    const auto out_path = scratch_dir() / "ingested.json";
    const auto result = run_cli("ingest --log " + quoted(log_path) + " --name system-1 " +
                                "--out " + quoted(out_path));
    REQUIRE(result.exit_code == 0);
    const auto first_bytes = read_file(out_path);

    const auto parsed = load_system_record(out_path);
    const auto expected = testfx::system1();
    CHECK(parsed.cases == 105);
    for (std::size_t s = 0; s < kStepCount; ++s) {
        CHECK(parsed.steps[s].counts == expected.steps[s].counts);
    }

    // a second run produces identical bytes
    const auto rerun = run_cli("ingest --log " + quoted(log_path) + " --name system-1 " +
                               "--out " + quoted(out_path));
    REQUIRE(rerun.exit_code == 0);
    CHECK(read_file(out_path) == first_bytes);
}

TEST_CASE("ingest: golden record for a two-row log") {
    const auto log_path = scratch_dir() / "two.csv";
    write_file(log_path, "case_id,retrieve_grade,reuse_grade,revise_grade\n"
                         "k1,e,e,e\n"
                         "k2,c,b,a\n");
    const auto out_path = scratch_dir() / "two.json";
    const auto result = run_cli("ingest --log " + quoted(log_path) + " --name pair " +
                                "--out " + quoted(out_path));
    REQUIRE(result.exit_code == 0);
    const std::string expected = R"({
  "name": "pair",
  "cases": 2,
  "steps": {
    "retrieve": {
      "a": 0,
      "b": 0,
      "c": 1,
      "d": 0,
      "e": 1
    },
    "reuse": {
      "a": 0,
      "b": 1,
      "c": 0,
      "d": 0,
      "e": 1
    },
    "revise": {
      "a": 1,
      "b": 0,
      "c": 0,
      "d": 0,
      "e": 1
    }
  }
}
)";
    CHECK(read_file(out_path) == expected);
}

TEST_CASE("ingest: failures exit 1 with row diagnostics") {
    const auto one_row = scratch_dir() / "one.csv";
    write_file(one_row, "case_id,retrieve_grade,reuse_grade,revise_grade\nk1,a,a,a\n");
    const auto out_path = scratch_dir() / "unused.json";
    const auto short_log = run_cli("ingest --log " + quoted(one_row) +
                                   " --name few --out " + quoted(out_path));
    CHECK(short_log.exit_code == 1);

    std::string bad = "case_id,retrieve_grade,reuse_grade,revise_grade\n";
    for (int i = 1; i <= 5; ++i) {
        bad += "k" + std::to_string(i) + ",c,b,a\n";
    }
    bad += "k6,c,f,a\n"; // line 7
    const auto bad_path = scratch_dir() / "bad.csv";
    write_file(bad_path, bad);
    const auto bad_run = run_cli("ingest --log " + quoted(bad_path) +
                                 " --name broken --out " + quoted(out_path));
    CHECK(bad_run.exit_code == 1);
    CHECK(bad_run.err.find("row 7") != std::string::npos);
}

TEST_CASE("simulate: toy fixture produces a five-row log and a grown library") {
    const auto log_path = scratch_dir() / "sim.csv";
    const auto lib_path = scratch_dir() / "grown.json";
    const auto result = run_cli("simulate --library " + data_file("toy_library.json") +
                                " --problems " + data_file("toy_problems.json") +
                                " --out " + quoted(log_path) + " --save-library " +
                                quoted(lib_path));
    REQUIRE(result.exit_code == 0);
    const auto entries = load_case_log(log_path);
    CHECK(entries.size() == 5);
    const auto grown = load_library(lib_path);
    CHECK(grown.size() == 8);
    CHECK(grown.cases().back().id == "p5");
}

TEST_CASE("simulate: problems identical to stored cases grade e everywhere") {
    const auto problems_path = scratch_dir() / "identical.json";
    write_file(problems_path, R"({
  "problems": [
    {"features": [0.1, 0.2], "truth": 0.15},
    {"features": [0.9, 0.8], "truth": 0.85}
  ]
})");
    const auto log_path = scratch_dir() / "identical.csv";
    const auto result = run_cli("simulate --library " + data_file("toy_library.json") +
                                " --problems " + quoted(problems_path) + " --out " +
                                quoted(log_path));
    REQUIRE(result.exit_code == 0);
    for (const auto& entry : load_case_log(log_path)) {
        CHECK(entry.retrieve_grade == Grade::e);
        CHECK(entry.reuse_grade == Grade::e);
        CHECK(entry.revise_grade == Grade::e);
    }
}

TEST_CASE("simulate: golden CSV for the one-dimensional fixture") {
    const auto lib_path = scratch_dir() / "line_library.json";
    write_file(lib_path, R"({
  "dim": 1,
  "cases": [
    {"id": "A", "features": [0.0], "solution": 0.0},
    {"id": "B", "features": [1.0], "solution": 1.0}
  ]
})");
    const auto problems_path = scratch_dir() / "line_problem.json";
    write_file(problems_path, R"({"problems": [{"features": [0.4], "truth": 0.35}]})");
    const auto log_path = scratch_dir() / "line.csv";
    const auto result = run_cli("simulate --library " + quoted(lib_path) +
                                " --problems " + quoted(problems_path) + " --out " +
                                quoted(log_path));
    REQUIRE(result.exit_code == 0);
    CHECK(read_file(log_path) ==
          "case_id,retrieve_grade,reuse_grade,revise_grade\np1,d,d,d\n");
}

TEST_CASE("simulate: threshold flag is validated") {
    const auto log_path = scratch_dir() / "thresholds.csv";
    const auto good = run_cli("simulate --library " + data_file("toy_library.json") +
                              " --problems " + data_file("toy_problems.json") +
                              " --thresholds 0.1,0.2,0.3,0.4 --out " + quoted(log_path));
    CHECK(good.exit_code == 0);

    const auto unsorted = run_cli("simulate --library " + data_file("toy_library.json") +
                                  " --problems " + data_file("toy_problems.json") +
                                  " --thresholds 0.5,0.4,0.6,0.8 --out " +
                                  quoted(log_path));
    CHECK(unsorted.exit_code == 1);

    const auto short_list = run_cli(
        "simulate --library " + data_file("toy_library.json") + " --problems " +
        data_file("toy_problems.json") + " --thresholds 0.2,0.4 --out " +
        quoted(log_path));
    CHECK(short_list.exit_code == 1);
}
