// hrg: generate, analyze and sweep hyperbolic random graphs.
//
// Exit codes: 0 success, 1 check failures, 2 usage, 3 I/O, 4 data inconsistency.

#include <hrg/graph.hpp>
#include <hrg/io.hpp>
#include <hrg/report.hpp>
#include <hrg/sampling.hpp>
#include <hrg/sweep.hpp>
#include <hrg/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

namespace {

enum ExitCode : int {
    EXIT_OK = 0,
    EXIT_CHECKS = 1,
    EXIT_USAGE = 2,
    EXIT_IO = 3,
    EXIT_DATA = 4,
};

struct GenerateArgs {
    std::uint64_t n = 0;
    double alpha = 0.75;
    double c_param = 0.0;
    std::uint64_t seed = 1;
    bool poisson = false;
    std::string out_coords = "coords.tsv";
    std::string out_edges = "edges.tsv";
};

struct AnalyzeArgs {
    std::string coords;
    std::string edges;
    std::string report;
    double inner_c = hrg::DEFAULT_INNER_C;
};

struct SweepArgs {
    std::string config;
    std::string out;
    int jobs = 0;
    bool timings = false;
};

struct VerifyArgs {
    bool quick = false;
    std::uint64_t seed = 1;
    bool inject_fault = false;
};

int run_generate(const GenerateArgs& args) {
    const hrg::ModelParams params(args.n, args.alpha, args.c_param);
    if (!params.in_regime())
        std::cerr << "note: alpha = " << args.alpha << " is outside (1/2, 1)\n";
    const auto mode = args.poisson ? hrg::SamplingMode::Poisson : hrg::SamplingMode::FixedN;
    const auto points = hrg::sample(params, mode, args.seed);
    const auto graph = hrg::build_banded(points);
    hrg::save_coordinates(args.out_coords, points);
    hrg::save_edges(args.out_edges, graph);
    std::cerr << "wrote " << points.size() << " nodes and " << graph.num_edges() << " edges\n";
    return EXIT_OK;
}

int run_analyze(const AnalyzeArgs& args) {
    const auto graph = hrg::load_graph(args.coords, args.edges);
    hrg::AnalysisOptions options;
    options.inner_c = args.inner_c;
    const auto result = hrg::analyze(graph, options);
    const std::string text = hrg::report_json(graph, result).dump(2) + "\n";
    if (args.report.empty() || args.report == "-") {
        std::cout << text;
    } else {
        std::ofstream out(args.report, std::ios::binary | std::ios::trunc);
        if (!out || !(out << text) || !out.flush())
            throw hrg::IoError("cannot write report '" + args.report + "'");
    }
    return EXIT_OK;
}

int run_sweep(const SweepArgs& args) {
    std::ifstream in(args.config);
    if (!in)
        throw hrg::IoError("cannot open config '" + args.config + "'");
    hrg::SweepConfig config;
    try {
        config = hrg::SweepConfig::from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
    }
    if (!args.out.empty())
        config.output = args.out;
    if (args.timings)
        config.timings = true;

    const auto rows = hrg::run_sweep(config, hrg::resolve_jobs(args.jobs));
    if (config.output.empty() || config.output == "-") {
        hrg::write_sweep_csv(std::cout, config, rows);
    } else {
        std::ofstream out(config.output, std::ios::binary | std::ios::trunc);
        if (!out)
            throw hrg::IoError("cannot open '" + config.output + "' for writing");
        hrg::write_sweep_csv(out, config, rows);
        if (!out.flush())
            throw hrg::IoError("failed writing '" + config.output + "'");
    }
    int status = EXIT_OK;
    for (const auto& r : rows) {
        if (r.failed) {
            std::cerr << "cell n=" << r.n << " seed=" << r.seed << " failed: " << r.error << "\n";
            status = EXIT_CHECKS;
        }
    }
    return status;
}

int run_verify(const VerifyArgs& args) {
    hrg::VerifyOptions options;
    options.quick = args.quick;
    options.seed = args.seed;
    options.inject_fault = args.inject_fault;
    const auto results = hrg::run_verify(options, [](const hrg::CheckResult& r) {
        std::printf("%-4s %-34s", r.passed ? "ok" : "FAIL", r.name.c_str());
        if (r.p_value)
            std::printf(" p=%-10.4g", *r.p_value);
        std::printf(" %s\n", r.detail.c_str());
        std::fflush(stdout);
    });
    const bool ok = hrg::all_passed(results);
    std::printf("%s\n", ok ? "all checks passed" : "some checks FAILED");
    return ok ? EXIT_OK : EXIT_CHECKS;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hyperbolic random graph generator and analyzer"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Sample one graph and write coordinate and edge files");
    generate->add_option("--n", gen.n, "Number of nodes (mean count with --poisson)")->required()->check(CLI::PositiveNumber);
    generate->add_option("--alpha", gen.alpha, "Radial dispersion alpha")->capture_default_str();
    generate->add_option("--c-param", gen.c_param, "Radius offset C in R = 2 ln n + C")->capture_default_str();
    generate->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
    generate->add_flag("--poisson", gen.poisson, "Poisson point process instead of exactly n nodes");
    generate->add_option("--out-coords", gen.out_coords, "Coordinate file")->capture_default_str();
    generate->add_option("--out-edges", gen.out_edges, "Edge file")->capture_default_str();

    AnalyzeArgs ana;
    auto* analyze = app.add_subcommand("analyze", "Analyze a coordinate/edge file pair and emit a JSON report");
    analyze->add_option("--coords", ana.coords, "Coordinate file")->required();
    analyze->add_option("--edges", ana.edges, "Edge file")->required();
    analyze->add_option("--report", ana.report, "JSON output path (default stdout)");
    analyze->add_option("--inner-c", ana.inner_c, "Inner band constant c")->capture_default_str();

    SweepArgs swp;
    auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep and write a CSV table");
    sweep->add_option("--config", swp.config, "JSON sweep configuration")->required();
    sweep->add_option("--out", swp.out, "CSV output path (overrides the config)");
    sweep->add_option("--jobs", swp.jobs, "Parallel cells (falls back to HRG_JOBS)");
    sweep->add_flag("--timings", swp.timings, "Record wall-clock times in gen_ms/analysis_ms");

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "Run the built-in verification suite");
    verify->add_flag("--quick", ver.quick, "Reduced sample sizes");
    verify->add_option("--seed", ver.seed, "Random seed")->capture_default_str();
    verify->add_flag("--inject-fault", ver.inject_fault, "Corrupt one generated graph (negative control)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return EXIT_USAGE;
    }

    try {
        if (generate->parsed())
            return run_generate(gen);
        if (analyze->parsed())
            return run_analyze(ana);
        if (sweep->parsed())
            return run_sweep(swp);
        return run_verify(ver);
    } catch (const hrg::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_IO;
    } catch (const hrg::DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_DATA;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return EXIT_USAGE;
    }
}
