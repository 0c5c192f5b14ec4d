#include <hrg/bands.hpp>
#include <hrg/components.hpp>
#include <hrg/degree.hpp>
#include <hrg/diameter.hpp>
#include <hrg/graph.hpp>
#include <hrg/io.hpp>
#include <hrg/sweep.hpp>
#include <hrg/validators.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <ostream>
#include <set>
#include <stdexcept>
#include <thread>

namespace hrg {

namespace {

constexpr std::uint64_t UNDERPASS_STREAM = 7;

const std::set<std::string> CONFIG_KEYS = {
    "n_values", "alpha", "C", "seeds", "base_seed", "mode", "inner_c", "output",
    "diameter", "degrees", "bands", "underpass_trials", "timings",
};

}  // namespace

void SweepConfig::validate() const {
    if (n_values.empty())
        throw std::invalid_argument("sweep config: n_values must not be empty");
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        if (n_values[i] == 0)
            throw std::invalid_argument("sweep config: n values must be positive");
        if (i > 0 && n_values[i] <= n_values[i - 1])
            throw std::invalid_argument("sweep config: n_values must be strictly increasing");
    }
    if (seeds < 1)
        throw std::invalid_argument("sweep config: seeds must be at least 1");
    if (!std::isfinite(inner_c))
        throw std::invalid_argument("sweep config: inner_c must be finite");
    for (auto n : n_values)
        ModelParams(n, alpha, C);  // throws on bad alpha / C
}

SweepConfig SweepConfig::from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw std::invalid_argument("sweep config: expected a JSON object");
    for (const auto& [key, value] : j.items())
        if (!CONFIG_KEYS.contains(key))
            throw std::invalid_argument("sweep config: unknown key '" + key + "'");
    SweepConfig c;
    try {
        c.n_values = j.at("n_values").get<std::vector<std::uint64_t>>();
        c.alpha = j.value("alpha", c.alpha);
        c.C = j.value("C", c.C);
        c.seeds = j.value("seeds", c.seeds);
        c.base_seed = j.value("base_seed", c.base_seed);
        c.mode = parse_sampling_mode(j.value("mode", std::string("fixed")));
        c.inner_c = j.value("inner_c", c.inner_c);
        c.output = j.value("output", c.output);
        c.diameter = j.value("diameter", c.diameter);
        c.degrees = j.value("degrees", c.degrees);
        c.bands = j.value("bands", c.bands);
        c.underpass_trials = j.value("underpass_trials", c.underpass_trials);
        c.timings = j.value("timings", c.timings);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("sweep config: ") + e.what());
    }
    c.validate();
    return c;
}

nlohmann::json SweepConfig::to_json() const {
    return {
        {"n_values", n_values}, {"alpha", alpha},
        {"C", C},               {"seeds", seeds},
        {"base_seed", base_seed}, {"mode", std::string(to_string(mode))},
        {"inner_c", inner_c},   {"output", output},
        {"diameter", diameter}, {"degrees", degrees},
        {"bands", bands},       {"underpass_trials", underpass_trials},
        {"timings", timings},
    };
}

SweepRecord run_cell(const SweepConfig& config, std::uint64_t n, std::uint64_t seed) {
    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    };

    SweepRecord rec;
    rec.n = n;
    rec.seed = seed;
    const ModelParams params(n, config.alpha, config.C);
    rec.R = params.R();

    const auto t_gen = clock::now();
    const Graph g = build_banded(sample(params, config.mode, seed));
    const double gen_ms = ms_since(t_gen);

    const auto t_analysis = clock::now();
    rec.nodes = g.num_nodes();
    rec.m = g.num_edges();
    rec.mean_degree = g.num_nodes() == 0 ? 0.0 : 2.0 * static_cast<double>(rec.m) / static_cast<double>(g.num_nodes());

    const ComponentReport comps = analyze_components(g, false);
    rec.giant_size = comps.giant_size;
    rec.second_size = comps.second_size;
    if (config.diameter && comps.giant_size > 0)
        rec.giant_diameter = exact_diameter(g, comps.members(comps.giant_label));
    if (config.degrees)
        rec.beta_hat = degree_stats(g).beta_hat;
    if (config.bands) {
        rec.max_empty_run = max_empty_sector_run(g.points(), params, config.inner_c);
        const auto hops = inner_band_hops(g, config.inner_c);
        rec.inner_band_hops = hops.max_hops;
        rec.inner_unreachable = hops.unreachable;
    }
    rec.core_clique = check_core_clique(g);
    rec.core_outside_giant = core_outside_giant(g, comps);
    if (config.underpass_trials > 0) {
        const auto up = check_underpass(g, config.underpass_trials, split_seed(seed, UNDERPASS_STREAM));
        rec.underpass_triples = up.triples;
        rec.underpass_violations = up.violations;
    }
    const double analysis_ms = ms_since(t_analysis);
    if (config.timings) {
        rec.gen_ms = gen_ms;
        rec.analysis_ms = analysis_ms;
    }
    return rec;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config, unsigned jobs, const CellRunner& runner) {
    config.validate();
    struct Cell {
        std::uint64_t n;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (auto n : config.n_values)
        for (std::uint64_t k = 0; k < config.seeds; ++k)
            cells.push_back({n, config.base_seed + k});

    std::vector<SweepRecord> rows(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            try {
                rows[i] = runner(config, cells[i].n, cells[i].seed);
            } catch (const std::exception& e) {
                rows[i] = SweepRecord{};
                rows[i].failed = true;
                rows[i].error = e.what();
            }
            rows[i].n = cells[i].n;
            rows[i].seed = cells[i].seed;
        }
    };

    if (jobs == 0)
        jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, cells.size()));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
    }
    return rows;
}

const char* const SWEEP_CSV_HEADER =
    "n,seed,R,m,mean_degree,beta_hat,giant_size,second_size,giant_diameter,max_empty_run,inner_band_hops,gen_ms,"
    "analysis_ms";

void write_sweep_csv(std::ostream& out, const SweepConfig& config, const std::vector<SweepRecord>& records) {
    out << SWEEP_CSV_HEADER << '\n';
    for (const auto& r : records) {
        out << r.n << ',' << r.seed;
        if (r.failed) {
            out << ",,,,,,,,,,,\n";
            continue;
        }
        out << ',' << format_double(r.R) << ',' << r.m << ',' << format_double(r.mean_degree) << ',';
        if (config.degrees)
            out << format_double(r.beta_hat);
        out << ',' << r.giant_size << ',' << r.second_size << ',';
        if (config.diameter)
            out << r.giant_diameter;
        out << ',';
        if (config.bands)
            out << r.max_empty_run;
        out << ',';
        if (config.bands)
            out << r.inner_band_hops;
        out << ',' << format_double(r.gen_ms) << ',' << format_double(r.analysis_ms) << '\n';
    }
}

unsigned resolve_jobs(int flag_value) {
    if (flag_value > 0)
        return static_cast<unsigned>(flag_value);
    if (const char* env = std::getenv("HRG_JOBS")) {
        const int v = std::atoi(env);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    return 0;
}

}  // namespace hrg
