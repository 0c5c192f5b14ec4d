#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hrg {

/// Probabilistic checks fail only when their p-value drops below this.
inline constexpr double VERIFY_P_THRESHOLD = 1e-3;

struct CheckResult {
    std::string name;
    bool passed = false;
    std::optional<double> p_value;  // set for statistical checks
    std::string detail;
};

struct VerifyOptions {
    bool quick = false;
    std::uint64_t seed = 1;
    /// Drops one endpoint's copy of an edge from a generated graph before the
    /// graph checks run; the suite must then fail.
    bool inject_fault = false;
};

/// Runs the geometry, sampler, generator and analysis checks. `on_result`
/// is called as each check finishes.
std::vector<CheckResult> run_verify(const VerifyOptions& options,
                                    const std::function<void(const CheckResult&)>& on_result = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace hrg
