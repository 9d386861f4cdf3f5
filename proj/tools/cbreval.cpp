// cbreval - assess and compare CBR systems with two fuzzy models, and run a
// small deterministic CBR simulation to produce graded case logs.
//
// Exit codes: 0 success, 1 input or validation error, 2 degenerate system
// (the possibilistic model is not applicable).

#include <array>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cbreval/cbreval.hpp"

namespace {

struct AssessOptions {
    std::string input;
    std::string format = "text";
    bool profiles = false;
};

struct CompareOptions {
    std::string a;
    std::string b;
    std::string format = "text";
};

struct IngestOptions {
    std::string log;
    std::string name;
    std::string out;
};

struct SimulateOptions {
    std::string library;
    std::string problems;
    std::vector<double> thresholds = {0.2, 0.4, 0.6, 0.8};
    std::string out;
    std::string save_library;
};

int run_assess(const AssessOptions& opt) {
    const cbreval::SystemRecord record = cbreval::load_system_record(opt.input);
    const cbreval::AssessmentResult result = cbreval::assess_system(record);
    if (opt.format == "json") {
        std::cout << cbreval::assessment_to_json(result).dump(2) << '\n';
    } else {
        std::cout << cbreval::render_assessment_text(result, opt.profiles);
    }
    return 0;
}

int run_compare(const CompareOptions& opt) {
    const std::array<cbreval::SystemRecord, 2> records = {
        cbreval::load_system_record(opt.a), cbreval::load_system_record(opt.b)};
    const cbreval::ComparisonReport report = cbreval::compare_systems(records);
    if (opt.format == "json") {
        std::cout << cbreval::comparison_to_json(report).dump(2) << '\n';
    } else {
        std::cout << cbreval::render_comparison_text(report);
    }
    return 0;
}

int run_ingest(const IngestOptions& opt) {
    const std::vector<cbreval::CaseLogEntry> entries = cbreval::load_case_log(opt.log);
    const cbreval::SystemRecord record =
        cbreval::grades_from_case_log(entries, opt.name);
    cbreval::save_system_record(record, opt.out);
    return 0;
}

int run_simulate(const SimulateOptions& opt) {
    if (opt.thresholds.size() != 4) {
        throw cbreval::RangeError("--thresholds expects exactly 4 cut points");
    }
    const cbreval::GradeThresholds thresholds = cbreval::GradeThresholds::validated(
        {opt.thresholds[0], opt.thresholds[1], opt.thresholds[2], opt.thresholds[3]});
    cbreval::CaseLibrary library = cbreval::load_library(opt.library);
    const std::vector<cbreval::Problem> problems = cbreval::load_problems(opt.problems);
    cbreval::BatchResult result =
        cbreval::run_batch(std::move(library), problems, thresholds);
    cbreval::save_case_log(result.log, opt.out);
    if (!opt.save_library.empty()) {
        cbreval::save_library(result.library, opt.save_library);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fuzzy assessment and comparison of CBR systems"};
    app.require_subcommand(1);

    AssessOptions assess_opt;
    CLI::App* assess = app.add_subcommand(
        "assess", "assess one system record under both fuzzy models");
    assess->add_option("--input", assess_opt.input, "system record (JSON)")->required();
    assess->add_option("--format", assess_opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    assess->add_flag("--profiles", assess_opt.profiles,
                     "append the 125-row profile table (text format)");

    CompareOptions compare_opt;
    CLI::App* compare =
        app.add_subcommand("compare", "compare two system records across both models");
    compare->add_option("--a", compare_opt.a, "first system record (JSON)")->required();
    compare->add_option("--b", compare_opt.b, "second system record (JSON)")->required();
    compare->add_option("--format", compare_opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    IngestOptions ingest_opt;
    CLI::App* ingest =
        app.add_subcommand("ingest", "tally a CSV case log into a system record");
    ingest->add_option("--log", ingest_opt.log, "case log (CSV)")->required();
    ingest->add_option("--name", ingest_opt.name, "system name")->required();
    ingest->add_option("--out", ingest_opt.out, "output record path (JSON)")->required();

    SimulateOptions simulate_opt;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "run the CBR cycle over a problem list and emit a graded log");
    simulate->add_option("--library", simulate_opt.library, "case library (JSON)")
        ->required();
    simulate->add_option("--problems", simulate_opt.problems, "problem list (JSON)")
        ->required();
    simulate
        ->add_option("--thresholds", simulate_opt.thresholds,
                     "grade cut points t1,t2,t3,t4")
        ->delimiter(',');
    simulate->add_option("--out", simulate_opt.out, "output case log path (CSV)")
        ->required();
    simulate->add_option("--save-library", simulate_opt.save_library,
                         "also write the grown library (JSON)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (assess->parsed()) {
            return run_assess(assess_opt);
        }
        if (compare->parsed()) {
            return run_compare(compare_opt);
        }
        if (ingest->parsed()) {
            return run_ingest(ingest_opt);
        }
        return run_simulate(simulate_opt);
    } catch (const cbreval::DegenerateSystemError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
