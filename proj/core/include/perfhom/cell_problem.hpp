#pragma once

#include <array>
#include <vector>

#include "perfhom/operators.hpp"
#include "perfhom/unit_cell.hpp"

namespace perfhom {

/// Periodic corrector for one coordinate direction on the fluid part of the
/// unit cell: zero mean over Y*, values on solid cells are zero.
struct CorrectorField {
    int direction = 0;  // 0..d-1
    Field values;       // full-grid storage on the unit-cell raster
    SolveReport report;
};

/// Homogenized diffusion tensor and cell measures.
struct EffectiveTensor {
    int dim = 2;
    std::array<double, 9> D{};    // row-major; the energy-form value
    std::array<double, 9> D_flux{};
    double theta = 1.0;           // cell-counted |Y*| of the rasterization
    double gamma = 0.0;           // |Gamma| (exact surface measure)
    double formula_gap = 0.0;     // max entrywise |D_flux - D|

    double operator()(int i, int j) const { return D[i * 3 + j]; }
    double min_eigenvalue() const;
    double max_eigenvalue() const;
};

/// Solve -div(grad w_j + e_j) = 0 on Y*, (grad w_j + e_j).n = 0 on Gamma,
/// Y-periodic, mean zero. The constant flux of e_j across Gamma moves to the
/// right-hand side. Residual <= tol or SolverError.
CorrectorField solve_corrector(const UnitCellSpec& cell, int direction, double tol = 1e-10);

/// Effective tensor from all d correctors. The energy form (exact discrete
/// quadratic form over fluid-fluid faces) is stored as D; the paper's flux
/// form (cell-counted measure plus cell-averaged corrector gradients omitting
/// faces into the solid) is the cross-check. Their gap is O(h); a gap beyond
/// the resolution-scaled threshold signals a discretization bug.
EffectiveTensor effective_tensor(const UnitCellSpec& cell,
                                 const std::vector<CorrectorField>& correctors);

}  // namespace perfhom
