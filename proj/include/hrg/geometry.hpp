#pragma once

#include <cstdint>
#include <functional>
#include <numbers>

namespace hrg {

inline constexpr double PI = std::numbers::pi;
inline constexpr double TWO_PI = 2.0 * std::numbers::pi;

/**
 * Constants of the threshold model G(n, alpha, C).
 *
 * The disc radius is always derived, R = 2 ln n + C. Any alpha > 0 is
 * accepted; alpha outside (1/2, 1) is flagged through in_regime() since the
 * degree exponent degenerates to 2 below 1/2 and leaves (2, 3) above 1.
 */
class ModelParams {
public:
    ModelParams(std::uint64_t n, double alpha, double C);

    std::uint64_t n() const { return n_; }
    double alpha() const { return alpha_; }
    double C() const { return C_; }
    double R() const { return R_; }

    bool in_regime() const { return alpha_ > 0.5 && alpha_ < 1.0; }

    static double radius_for(std::uint64_t n, double C);

    friend bool operator==(const ModelParams&, const ModelParams&) = default;

private:
    std::uint64_t n_;
    double alpha_;
    double C_;
    double R_;
};

/// Native polar coordinates; r is the hyperbolic distance to the origin.
struct PolarPoint {
    double r = 0.0;
    double phi = 0.0;

    PolarPoint() = default;
    /// phi is wrapped into [0, 2pi); negative r is rejected.
    PolarPoint(double r, double phi);

    friend bool operator==(const PolarPoint&, const PolarPoint&) = default;
};

double normalize_angle(double phi);

/// Small relative angle in [0, pi], equal to arccos(cos(phi_u - phi_v)).
double delta_phi(const PolarPoint& u, const PolarPoint& v);

/// 1 - cos(dphi), evaluated as 2 sin^2(dphi / 2) so it stays accurate for
/// tiny angles.
double one_minus_cos(double dphi);

/**
 * cosh of the hyperbolic distance, written as
 *   cosh(r_u - r_v) + (1 - cos dphi) sinh r_u sinh r_v
 * which is algebraically cosh r_u cosh r_v - sinh r_u sinh r_v cos dphi but
 * has no cancellation.
 */
double cosh_distance(const PolarPoint& u, const PolarPoint& v);

/// cosh^-1 of cosh_distance(), evaluated through sinh^2(d / 2) so that short
/// distances keep full relative precision.
double hyperbolic_distance(const PolarPoint& u, const PolarPoint& v);

/// d(u, v) <= R without the inverse cosh. Ties are edges.
bool edge_indicator(const PolarPoint& u, const PolarPoint& v, double R);

/**
 * Per-node cache for repeated edge tests against the same R. Both graph
 * builders go through this, and edge_indicator() is defined in terms of it,
 * so every component sees bit-identical verdicts.
 */
struct EdgeKernel {
    explicit EdgeKernel(double R);

    struct Node {
        double r;
        double phi;
        double sinh_r;
    };

    static Node prepare(const PolarPoint& p);

    bool connected(const Node& u, const Node& v) const;

    double R;
    double cosh_R;
};

/**
 * Largest angular separation at which radii r and y are still adjacent.
 * Returns pi when every angle connects (r + y <= R) and 0 when none does.
 * Throws std::domain_error for r <= 0 or y <= 0.
 */
double theta_exact(double r, double y, double R);

/// Leading-order approximation 2 exp((R - r - y) / 2); requires y >= R - r.
double theta_approx(double r, double y, double R);

/// Radial density alpha sinh(alpha r) / (cosh(alpha R) - 1); 0 outside [0, R].
double radial_pdf(double r, const ModelParams& params);

/// Exact measure of B_0(r), i.e. the radial CDF.
double mu_ball_origin_exact(double r, const ModelParams& params);

/// Leading term of mu(B_r(R) cap B_0(R - m)) for a point at radius r.
/// Throws std::domain_error at alpha == 1/2.
double mu_lens_approx(double r, double m, const ModelParams& params);

struct MonteCarloEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
};

using RegionPredicate = std::function<bool(const PolarPoint&)>;

/// Fraction of `samples` model-distributed points that fall in `region`,
/// with the binomial standard error.
MonteCarloEstimate mu_monte_carlo(const RegionPredicate& region, const ModelParams& params,
                                  std::uint64_t samples, std::uint64_t seed);

}  // namespace hrg
