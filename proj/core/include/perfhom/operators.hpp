#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "perfhom/grid.hpp"

namespace perfhom {

enum class BoundaryTag { periodic, neumann };

/// Constant symmetric d x d coefficient tensor (row-major storage).
struct CoeffTensor {
    int dim = 2;
    std::array<double, 9> a{};
    double operator()(int i, int j) const { return a[i * 3 + j]; }
    double& operator()(int i, int j) { return a[i * 3 + j]; }
    static CoeffTensor scalar(int dim, double c) {
        CoeffTensor t;
        t.dim = dim;
        for (int i = 0; i < dim; ++i) t(i, i) = c;
        return t;
    }
    bool is_diagonal() const;
    void require_spd() const;  // throws ConfigError if not symmetric positive definite
};

/// Matrix-free finite-volume discretization of u -> -div(coeff grad u) on the
/// fluid cells of a masked uniform grid. Fluxes through fluid-solid faces and
/// (with the neumann tag) exterior faces are zero; the periodic tag wraps.
/// The action is symmetric with zero row sums; off-diagonal tensor entries
/// use vertex-averaged cross-gradients (nine-point stencil in 2D).
class MaskedOperator {
public:
    MaskedOperator(Box box, const Mask* mask, CoeffTensor coeff, BoundaryTag tag);
    MaskedOperator(Box box, const Mask* mask, double coeff, BoundaryTag tag)
        : MaskedOperator(box, mask, CoeffTensor::scalar(box.dim, coeff), tag) {}

    /// y = A x over full-grid arrays; solid entries of y are set to zero.
    void apply(const double* x, double* y) const;

    const Box& box() const { return box_; }
    const Mask* mask() const { return mask_; }
    std::int64_t size() const { return box_.cells(); }
    std::int64_t fluid_count() const { return fluid_count_; }
    BoundaryTag tag() const { return tag_; }

private:
    void apply_diagonal_part(const double* x, double* y) const;
    void apply_cross_pair(const double* x, double* y, int axis_a, int axis_b) const;

    Box box_;
    const Mask* mask_;  // nullptr = all fluid
    CoeffTensor coeff_;
    BoundaryTag tag_;
    std::int64_t fluid_count_;
    bool fluid(std::int64_t idx) const { return !mask_ || (*mask_)[idx]; }
};

struct SolveReport {
    int iterations = 0;
    double rel_residual = 0.0;
    bool converged = false;
};

enum class Nullspace { none, project_mean };

/// Conjugate gradients for (sigma*I + scale*A) x = b restricted to fluid cells.
/// x carries the initial guess on entry. With Nullspace::project_mean the rhs
/// and all iterates are kept zero-mean over the fluid cells. `observer`, when
/// set, sees each iterate (tests use it to track the error A-norm).
SolveReport cg_solve(const MaskedOperator& A, const double* b, double* x, double tol,
                     int maxit, Nullspace ns = Nullspace::none, double sigma = 0.0,
                     double scale = 1.0,
                     const std::function<void(const double*)>& observer = {});

/// Deterministic midpoint-rule integral of a fluid-cell field (Kahan sum).
double integrate_field(const double* field, const Mask* mask, const Box& box);

/// Kahan-compensated sum of an arbitrary range.
double compensated_sum(const double* v, std::int64_t n);

}  // namespace perfhom
