#include <hrg/layers.hpp>

#include <cmath>
#include <limits>

namespace hrg {

int layer_index(double r, double R) {
    return static_cast<int>(std::floor(R - r)) + 1;
}

double inner_band_radius(const ModelParams& params, double c) {
    if (params.alpha() >= 1.0)
        return -std::numeric_limits<double>::infinity();
    return params.R() - std::log(params.R()) / (1.0 - params.alpha()) - c;
}

bool inner_band(const PolarPoint& p, const ModelParams& params, double c) {
    return p.r <= inner_band_radius(params, c);
}

}  // namespace hrg
