#include "perfhom/unit_cell.hpp"

#include <cmath>
#include <numbers>

namespace perfhom {

double UnitCellSpec::theta_discrete() const {
    const double total = static_cast<double>(fluid_mask.size());
    return static_cast<double>(count_fluid(fluid_mask)) / total;
}

UnitCellSpec build_unit_cell(int dim, double Theta, int m) {
    if (dim != 2 && dim != 3)
        throw ConfigError("unit cell: dimension d must be 2 or 3, got " + std::to_string(dim));
    if (!(Theta >= 0.0) || Theta > 0.25)
        throw ConfigError("unit cell: hole_radius Theta must lie in [0, 1/4], got " +
                          std::to_string(Theta));
    if (m < 8)
        throw ConfigError("unit cell: resolution m must be >= 8, got " + std::to_string(m));

    UnitCellSpec cell;
    cell.dim = dim;
    cell.hole_radius = Theta;
    cell.resolution = m;

    constexpr double pi = std::numbers::pi;
    if (dim == 2) {
        cell.theta_exact = 1.0 - pi * Theta * Theta;
        cell.gamma_exact = 2.0 * pi * Theta;
    } else {
        cell.theta_exact = 1.0 - 4.0 / 3.0 * pi * Theta * Theta * Theta;
        cell.gamma_exact = 4.0 * pi * Theta * Theta;
    }
    if (Theta == 0.0) cell.gamma_exact = 0.0;

    const std::int64_t mk = (dim == 3) ? m : 1;
    cell.fluid_mask.assign(static_cast<std::size_t>(m) * m * mk, 1);
    const double r2 = Theta * Theta;
    for (std::int64_t k = 0; k < mk; ++k) {
        const double z = (dim == 3) ? cell.center(k) : 0.0;
        for (std::int64_t j = 0; j < m; ++j) {
            const double y = cell.center(j);
            for (std::int64_t i = 0; i < m; ++i) {
                const double x = cell.center(i);
                if (x * x + y * y + z * z <= r2) cell.fluid_mask[cell.index(i, j, k)] = 0;
            }
        }
    }
    return cell;
}

}  // namespace perfhom
