#include "geoconn/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "geoconn/report.hpp"

namespace geoconn {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw value_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void print_report(const RunReport& report, bool json) {
    if (json)
        std::cout << report_to_json(report) << "\n";
    else
        std::cout << report_to_text(report);
}

} // namespace

int cli_main(const std::vector<std::string>& args) {
    CLI::App app{"count geometrically connected components of Proj over a finite field"};
    app.require_subcommand(1);

    std::string count_file, oracle_file, info_file;
    std::string strategy = "ext";
    std::uint64_t seed = 1;
    std::uint32_t t_max = 64;
    bool count_json = false, oracle_json = false, verbose = false;

    auto* count = app.add_subcommand("count", "run the Frobenius pipeline");
    count->add_option("file", count_file, "problem file")->required();
    count->add_option("--strategy", strategy, "ext | heuristic")
        ->check(CLI::IsMember({"ext", "heuristic"}));
    count->add_option("--seed", seed, "seed for the parameter search");
    count->add_option("--t-max", t_max, "stabilization bound");
    count->add_flag("--json", count_json, "machine-readable output");
    count->add_flag("--verbose", verbose, "stage progress on stderr");

    auto* oracle = app.add_subcommand("oracle", "minimal-primes graph count "
                                                "(square-free monomial ideals)");
    oracle->add_option("file", oracle_file, "problem file")->required();
    oracle->add_flag("--json", oracle_json, "machine-readable output");

    auto* info = app.add_subcommand("info", "dimension, length and parameter system only");
    info->add_option("file", info_file, "problem file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (count->parsed()) {
            PipelineOptions opts;
            opts.strategy = strategy == "ext" ? Strategy::Ext : Strategy::Heuristic;
            opts.seed = seed;
            opts.t_max = t_max;
            opts.verbose = verbose;
            RunReport report = run_pipeline(parse_problem_file(read_file(count_file)), opts);
            print_report(report, count_json);
        } else if (oracle->parsed()) {
            RunReport report = run_oracle(parse_problem_file(read_file(oracle_file)));
            print_report(report, oracle_json);
        } else if (info->parsed()) {
            PipelineOptions opts;
            opts.stop_after_length = true;
            RunReport report = run_pipeline(parse_problem_file(read_file(info_file)), opts);
            std::cout << "dim R: " << report.dim_r << "\n";
            if (report.ell) std::cout << "ell: " << *report.ell << "\n";
            if (!report.hsop.empty()) {
                std::cout << "hsop:";
                for (const auto& [form, degree] : report.hsop)
                    std::cout << " (" << form << ", deg " << degree << ")";
                std::cout << "\n";
            }
        }
    } catch (const parse_error& e) {
        std::cerr << "input error at position " << e.position() << ": " << e.what() << "\n";
        return 2;
    } catch (const value_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const budget_error& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace geoconn
