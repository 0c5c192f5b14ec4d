#pragma once

#include <hrg/geometry.hpp>

namespace hrg {

/// Layer i holds radii in (R - i, R - i + 1]; r = R - i belongs to layer i + 1.
int layer_index(double r, double R);
inline int layer_index(const PolarPoint& p, const ModelParams& params) { return layer_index(p.r, params.R()); }

/// Outer radius of the inner band, R - ln(R) / (1 - alpha) - c. Only
/// meaningful for alpha < 1; returns -infinity otherwise (empty band).
double inner_band_radius(const ModelParams& params, double c);

bool inner_band(const PolarPoint& p, const ModelParams& params, double c);

/// Membership in the core B_0(R/2), whose nodes are pairwise adjacent.
inline bool in_core(const PolarPoint& p, const ModelParams& params) { return p.r <= 0.5 * params.R(); }

}  // namespace hrg
