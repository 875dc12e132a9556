#pragma once

#include <cstdint>
#include <vector>

#include "perfhom/grid.hpp"

namespace perfhom {

/// Reference periodic cell Y = [-1/2,1/2)^d with a centered spherical hole T
/// of radius Theta; Y* = Y \ closure(T), Gamma = boundary of T.
struct UnitCellSpec {
    int dim = 2;
    double hole_radius = 0.0;  // Theta, dimensionless, in [0, 1/4)
    int resolution = 8;        // m, cells per cell edge
    Mask fluid_mask;           // m^dim entries, cell center outside closure(T)
    double theta_exact = 1.0;  // |Y*|
    double gamma_exact = 0.0;  // |Gamma|

    /// Cell-counted fluid volume fraction of the rasterization.
    double theta_discrete() const;

    /// Center of cell (i,j[,k]) in Y coordinates.
    double center(std::int64_t i) const {
        return -0.5 + (static_cast<double>(i) + 0.5) / resolution;
    }

    std::int64_t index(std::int64_t i, std::int64_t j, std::int64_t k = 0) const {
        const std::int64_t m = resolution;
        return i + m * (j + m * k);
    }
};

/// Rasterize the reference cell. A grid cell is fluid iff its center lies
/// strictly outside the closed ball of radius Theta. Theta = 0 yields a fully
/// fluid cell with gamma_exact = 0.
UnitCellSpec build_unit_cell(int dim, double Theta, int m);

}  // namespace perfhom
