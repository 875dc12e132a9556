#include "perfhom/flux.hpp"

#include <cmath>
#include <numbers>

#include "perfhom/quadrature.hpp"

namespace perfhom {

namespace {
constexpr double pi = std::numbers::pi;

double bump1(double s) {
    if (s <= 0.0 || s >= 1.0) return 0.0;
    const double v = std::sin(pi * s);
    return v * v;
}
}  // namespace

double ramp_value(TimeRamp ramp, double tau, double t) {
    switch (ramp) {
        case TimeRamp::zero: return 0.0;
        case TimeRamp::linear: return std::min(t / tau, 1.0);
        case TimeRamp::smooth: return t < tau ? 0.5 * (1.0 - std::cos(pi * t / tau)) : 1.0;
    }
    return 0.0;
}

double BoundaryFlux::spatial(int i, const std::array<double, 3>& x, int dim) const {
    if (species[i].g == SpatialProfile::constant) return 1.0;
    double v = 1.0;
    const double w = (bump_hi - bump_lo) * L;
    for (int a = 0; a < dim; ++a) v *= bump1((x[a] - bump_lo * L) / w);
    return v;
}

double BoundaryFlux::cell_factor(int i, const std::array<double, 3>& y, int dim) const {
    switch (species[i].q) {
        case CellProfile::constant: return 1.0;
        case CellProfile::one_plus_cos_y1: return 1.0 + std::cos(2.0 * pi * y[0]);
        case CellProfile::one_plus_cos_prod: {
            double p = 1.0;
            for (int a = 0; a < dim; ++a) p *= std::cos(2.0 * pi * y[a]);
            return 1.0 + p;
        }
    }
    return 1.0;
}

double BoundaryFlux::eval(int i, double t, const std::array<double, 3>& x,
                          const std::array<double, 3>& y, int dim) const {
    const double a = species[i].amplitude;
    if (a == 0.0) return 0.0;
    return a * ramp_value(ramp, tau, t) * spatial(i, x, dim) * cell_factor(i, y, dim);
}

bool BoundaryFlux::active() const {
    if (ramp == TimeRamp::zero) return false;
    for (const auto& s : species)
        if (s.amplitude != 0.0) return true;
    return false;
}

double cell_profile_circle_integral(CellProfile q, double Theta, int dim) {
    if (Theta == 0.0) return 0.0;
    const double gamma = (dim == 2) ? 2.0 * pi * Theta : 4.0 * pi * Theta * Theta;
    if (q == CellProfile::constant) return gamma;
    if (dim == 2) {
        if (q == CellProfile::one_plus_cos_y1)
            return gamma * (1.0 + std::cyl_bessel_j(0, 2.0 * pi * Theta));
        // 1 + cos(2 pi y1) cos(2 pi y2): circle average J0(2 sqrt(2) pi Theta)
        return gamma * (1.0 + std::cyl_bessel_j(0, 2.0 * std::numbers::sqrt2 * pi * Theta));
    }
    BoundaryFlux f;
    f.species[0].q = q;
    f.species[0].amplitude = 1.0;
    return circle_quadrature(
        [&](const std::array<double, 3>& y) { return f.cell_factor(0, y, dim); }, Theta, 64,
        dim);
}

TimeRamp parse_time_ramp(const std::string& s) {
    if (s == "zero") return TimeRamp::zero;
    if (s == "linear") return TimeRamp::linear;
    if (s == "smooth") return TimeRamp::smooth;
    throw ConfigError("flux: unknown ramp '" + s + "' (zero|linear|smooth)");
}

SpatialProfile parse_spatial_profile(const std::string& s) {
    if (s == "const") return SpatialProfile::constant;
    if (s == "bump") return SpatialProfile::bump;
    throw ConfigError("flux: unknown spatial profile '" + s + "' (const|bump)");
}

CellProfile parse_cell_profile(const std::string& s) {
    if (s == "const") return CellProfile::constant;
    if (s == "one_plus_cos_y1") return CellProfile::one_plus_cos_y1;
    if (s == "one_plus_cos_prod") return CellProfile::one_plus_cos_prod;
    throw ConfigError("flux: unknown cell profile '" + s +
                      "' (const|one_plus_cos_y1|one_plus_cos_prod)");
}

}  // namespace perfhom
