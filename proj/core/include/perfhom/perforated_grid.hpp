#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "perfhom/grid.hpp"
#include "perfhom/unit_cell.hpp"

namespace perfhom {

/// One grid face separating a fluid cell from a solid (hole) cell.
/// `normal_axis`/`normal_sign` give the unit normal pointing out of the fluid
/// into the hole. `measure` is the raw face measure scaled per hole so that
/// the summed measure of each hole equals the true boundary measure of a
/// radius Theta*eps sphere exactly.
struct BoundaryFace {
    std::array<double, 3> x{};      // face center, physical coordinates
    std::array<double, 3> y{};      // (x - x_k)/eps, cell coordinates
    std::int32_t hole = 0;          // owning hole index into hole_centers
    std::int8_t normal_axis = 0;
    std::int8_t normal_sign = 1;
    std::int64_t fluid_cell = 0;    // linear index of the adjacent fluid cell
    double measure = 0.0;           // corrected face measure, length^(d-1)
};

/// Omega = [0,L]^d minus an eps-periodic array of spherical holes of radius
/// Theta*eps placed at the centers of those eps-blocks whose closed hole lies
/// inside the security zone complement Omega^delta.
struct PerforatedGrid {
    Box box;                 // grid over [0,L]^d with spacing h
    double epsilon = 0.0;
    double delta = 0.0;
    double hole_radius = 0.0;  // Theta (cell units); physical radius Theta*eps
    std::vector<std::array<double, 3>> hole_centers;
    Mask fluid_mask;
    std::vector<BoundaryFace> boundary_faces;

    std::int64_t fluid_cells() const { return count_fluid(fluid_mask); }
    std::int64_t hole_count() const { return static_cast<std::int64_t>(hole_centers.size()); }

    /// |Gamma_eps|: total corrected boundary measure over all holes.
    double gamma_eps() const;

    /// Fluid volume |Omega_eps| by cell counting.
    double fluid_volume() const { return static_cast<double>(fluid_cells()) * cell_volume(); }

    double cell_volume() const;
    double extent() const { return box.extent(0); }
    bool in_security_complement(const std::array<double, 3>& x) const;
};

/// Build the perforated grid. eps/h and L/eps must be integral (within
/// rounding); delta >= 0. A security zone covering all of Omega yields an
/// unperforated grid, not an error. Theta*eps < h (with Theta > 0) is a
/// geometry-resolution error.
PerforatedGrid build_perforated_grid(double L, double h, double eps, double delta,
                                     const UnitCellSpec& cell);

/// y = (x - x_k)/eps in Y = [-1/2,1/2)^d. x must lie within hole k's eps-block.
std::array<double, 3> map_to_cell_coords(const std::array<double, 3>& x, double eps,
                                         const std::array<double, 3>& hole_center);

/// Global version of the cell-coordinate map for the block-centered lattice:
/// y_a = frac(x_a/eps) - 1/2, so hole centers map to the origin.
inline double cell_coord(double x, double eps) {
    double f = x / eps;
    f -= std::int64_t(f);  // x >= 0 in [0,L]
    return f - 0.5;
}

/// Geometry summary record {d, L, h, epsilon, delta, theta_exact, gamma_exact,
/// n_holes, eps_gamma_eps} serialized as a JSON string.
std::string geometry_summary_json(const PerforatedGrid& grid, const UnitCellSpec& cell);

}  // namespace perfhom
