#pragma once

#include <array>
#include <string>

#include "perfhom/grid.hpp"

namespace perfhom {

/// Time ramps with s(0) = 0 by construction (compatibility at t = 0).
enum class TimeRamp { zero, linear, smooth };

/// Macroscopic profiles g_i(x) >= 0.
enum class SpatialProfile { constant, bump };

/// Y-periodic profiles q_i(y) >= 0 on Gamma.
enum class CellProfile { constant, one_plus_cos_y1, one_plus_cos_prod };

double ramp_value(TimeRamp ramp, double tau, double t);

/// Neumann influx data psi_i(t,x,y) = amplitude_i * s(t) * g_i(x) * q_i(y).
struct BoundaryFlux {
    struct Species {
        double amplitude = 0.0;
        SpatialProfile g = SpatialProfile::constant;
        CellProfile q = CellProfile::constant;
    };
    std::array<Species, 3> species{};
    TimeRamp ramp = TimeRamp::zero;
    double tau = 0.5;
    double L = 1.0;
    double bump_lo = 0.125;  // support of the bump profile, fractions of L
    double bump_hi = 0.875;

    double eval(int i, double t, const std::array<double, 3>& x,
                const std::array<double, 3>& y, int dim) const;
    double spatial(int i, const std::array<double, 3>& x, int dim) const;
    double cell_factor(int i, const std::array<double, 3>& y, int dim) const;
    bool active() const;
};

/// Integral of the q profile over Gamma = {|y| = Theta}: closed Bessel forms
/// in 2D, product quadrature in 3D.
double cell_profile_circle_integral(CellProfile q, double Theta, int dim);

TimeRamp parse_time_ramp(const std::string& s);
SpatialProfile parse_spatial_profile(const std::string& s);
CellProfile parse_cell_profile(const std::string& s);

}  // namespace perfhom
