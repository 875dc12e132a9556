#pragma once

#include <array>

#include "perfhom/grid.hpp"

namespace perfhom {

struct PhysicalParams {
    std::array<double, 3> d{1.0, 1.0, 1.0};  // diffusion coefficients, > 0
    double T = 1.0;                          // final time
    double dt = 0.01;                        // nominal time step

    void validate() const {
        for (int i = 0; i < 3; ++i)
            if (!(d[i] > 0.0))
                throw ConfigError("physics: d" + std::to_string(i + 1) +
                                  " must be strictly positive");
        if (!(T >= 0.0)) throw ConfigError("physics: T must be >= 0");
        if (!(dt > 0.0)) throw ConfigError("physics: dt must be > 0");
    }
};

/// The paper's boundary condition reads grad(a).n = eps*psi, and the
/// homogenized source carries d_i; `paper` follows that exactly (influx
/// d_i*eps*psi per unit area). `diffusive` documents the alternative reading
/// d_i*grad(a).n = eps*psi (influx eps*psi, homogenized source without d_i).
enum class FluxConvention { paper, diffusive };

/// Concentrations of the three species on fluid cells at one time instant.
/// Fields use full-grid storage with solid cells held at exactly zero.
struct SpeciesState {
    std::array<Field, 3> a{};
    double t = 0.0;
};

/// Shared reaction evaluation r = a3 - a1*a2 on fluid cells (zero on solid).
/// Species 1 and 2 gain +r, species 3 gains -r.
Field reaction_rate(const SpeciesState& state, const Mask* mask);

/// Extension by zero into the holes: copies the state, forcing solid cells
/// to exactly zero (a no-op for states maintained by the solvers).
SpeciesState extend_by_zero(const SpeciesState& state, const Mask* mask);

}  // namespace perfhom
