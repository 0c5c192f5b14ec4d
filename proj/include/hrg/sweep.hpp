#pragma once

#include <hrg/sampling.hpp>

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace hrg {

/**
 * Parameter sweep over node counts. Loaded from a flat JSON object whose keys
 * are the field names below; unknown keys are rejected.
 *
 * Cell (n, k) uses seed base_seed + k for k in [0, seeds).
 */
struct SweepConfig {
    std::vector<std::uint64_t> n_values;
    double alpha = 0.75;
    double C = 0.0;
    std::uint64_t seeds = 1;
    std::uint64_t base_seed = 1;
    SamplingMode mode = SamplingMode::FixedN;
    double inner_c = 1.0;
    std::string output;  // CSV path; empty means stdout

    bool diameter = true;
    bool degrees = true;
    bool bands = true;
    /// Underpass triples checked per cell; 0 disables the check.
    std::uint64_t underpass_trials = 0;
    /// gen_ms / analysis_ms hold wall-clock times when set and 0 otherwise,
    /// so the default table is a deterministic function of the config.
    bool timings = false;

    /// Throws std::invalid_argument describing the first broken constraint.
    void validate() const;

    static SweepConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

struct SweepRecord {
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    double R = 0.0;
    std::uint64_t m = 0;
    double mean_degree = 0.0;
    double beta_hat = 0.0;
    std::uint64_t giant_size = 0;
    std::uint64_t second_size = 0;
    int giant_diameter = 0;
    std::uint64_t max_empty_run = 0;
    int inner_band_hops = 0;
    double gen_ms = 0.0;
    double analysis_ms = 0.0;

    // not part of the CSV table
    std::uint64_t nodes = 0;
    bool core_clique = true;
    std::uint64_t core_outside_giant = 0;
    std::uint64_t inner_unreachable = 0;
    std::uint64_t underpass_triples = 0;
    std::uint64_t underpass_violations = 0;

    bool failed = false;
    std::string error;
};

using CellRunner = std::function<SweepRecord(const SweepConfig&, std::uint64_t n, std::uint64_t seed)>;

/// Generates and analyzes one (n, seed) cell.
SweepRecord run_cell(const SweepConfig& config, std::uint64_t n, std::uint64_t seed);

/// Runs every cell on up to `jobs` threads (0 = hardware concurrency). Rows come
/// back in (n, seed) order regardless of completion order; a cell that throws
/// yields a row with failed = true and the sweep carries on.
std::vector<SweepRecord> run_sweep(const SweepConfig& config, unsigned jobs, const CellRunner& runner = run_cell);

extern const char* const SWEEP_CSV_HEADER;

/// Header plus one row per record; failed rows keep n and seed and leave the
/// other columns empty.
void write_sweep_csv(std::ostream& out, const SweepConfig& config, const std::vector<SweepRecord>& records);

/// --jobs value if positive, else HRG_JOBS if set, else 0.
unsigned resolve_jobs(int flag_value);

}  // namespace hrg
