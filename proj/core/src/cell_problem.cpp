#include "perfhom/cell_problem.hpp"

#include <cmath>
#include <string>

namespace perfhom {

namespace {

Box cell_box(const UnitCellSpec& cell) {
    Box b;
    b.dim = cell.dim;
    const std::int64_t m = cell.resolution;
    b.n = {m, m, cell.dim == 3 ? m : 1};
    b.h = 1.0 / static_cast<double>(m);
    return b;
}

}  // namespace

CorrectorField solve_corrector(const UnitCellSpec& cell, int direction, double tol) {
    if (direction < 0 || direction >= cell.dim)
        throw ConfigError("solve_corrector: invalid direction " + std::to_string(direction));

    const Box box = cell_box(cell);
    const double h = box.h;
    const auto n = box.cells();
    const std::int64_t stride[3] = {1, box.n[0], box.n[0] * box.n[1]};

    CorrectorField w;
    w.direction = direction;
    w.values.assign(static_cast<std::size_t>(n), 0.0);
    if (cell.hole_radius == 0.0) {  // no boundary faces, b = 0, w = 0
        w.report.converged = true;
        return w;
    }

    // b_c = -(1/h) * sum over solid faces of c of e_j . n_f
    Field b(static_cast<std::size_t>(n), 0.0);
    const auto& mask = cell.fluid_mask;
    for (std::int64_t c = 0; c < n; ++c) {
        if (!mask[c]) continue;
        const auto pos = box.coords(c);
        const std::int64_t ncell = box.n[direction];
        for (int s : {-1, +1}) {
            std::int64_t p = (pos[direction] + s + ncell) % ncell;
            const std::int64_t nb = c + (p - pos[direction]) * stride[direction];
            if (!mask[nb]) b[c] -= static_cast<double>(s) / h;
        }
    }

    MaskedOperator A(box, &cell.fluid_mask, 1.0, BoundaryTag::periodic);
    w.report = cg_solve(A, b.data(), w.values.data(), tol, 50000, Nullspace::project_mean);
    if (!w.report.converged)
        throw SolverError("cell problem: CG failed to converge, residual " +
                          std::to_string(w.report.rel_residual));
    return w;
}

double EffectiveTensor::min_eigenvalue() const {
    if (dim == 2) {
        const double tr = (*this)(0, 0) + (*this)(1, 1);
        const double det = (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);
        const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
        return tr / 2.0 - disc;
    }
    // d=3: cyclic Jacobi on a copy
    std::array<double, 9> M = D;
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < 3; ++p)
            for (int q = p + 1; q < 3; ++q) off += M[p * 3 + q] * M[p * 3 + q];
        if (off < 1e-30) break;
        for (int p = 0; p < 3; ++p)
            for (int q = p + 1; q < 3; ++q) {
                if (M[p * 3 + q] == 0.0) continue;
                const double theta = (M[q * 3 + q] - M[p * 3 + p]) / (2.0 * M[p * 3 + q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (int k = 0; k < 3; ++k) {
                    const double mkp = M[k * 3 + p], mkq = M[k * 3 + q];
                    M[k * 3 + p] = c * mkp - s * mkq;
                    M[k * 3 + q] = s * mkp + c * mkq;
                }
                for (int k = 0; k < 3; ++k) {
                    const double mpk = M[p * 3 + k], mqk = M[q * 3 + k];
                    M[p * 3 + k] = c * mpk - s * mqk;
                    M[q * 3 + k] = s * mpk + c * mqk;
                }
            }
    }
    return std::min({M[0], M[4], M[8]});
}

double EffectiveTensor::max_eigenvalue() const {
    if (dim == 2) {
        const double tr = (*this)(0, 0) + (*this)(1, 1);
        const double det = (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);
        const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
        return tr / 2.0 + disc;
    }
    EffectiveTensor neg = *this;
    for (auto& v : neg.D) v = -v;
    return -neg.min_eigenvalue();
}

EffectiveTensor effective_tensor(const UnitCellSpec& cell,
                                 const std::vector<CorrectorField>& correctors) {
    const int d = cell.dim;
    if (static_cast<int>(correctors.size()) != d)
        throw ConfigError("effective_tensor: need all d correctors");

    const Box box = cell_box(cell);
    const double h = box.h;
    const double vol = std::pow(h, d);
    const auto n = box.cells();
    const auto& mask = cell.fluid_mask;
    const std::int64_t stride[3] = {1, box.n[0], box.n[0] * box.n[1]};

    EffectiveTensor T;
    T.dim = d;
    T.gamma = cell.gamma_exact;
    T.theta = cell.theta_discrete();

    // Energy form over fluid-fluid faces (periodic): for each axis a and each
    // face, accumulate (delta_ai + G w_i)(delta_aj + G w_j) * h^d.
    std::array<double, 9> De{};
    for (int a = 0; a < d; ++a) {
        const std::int64_t ncell = box.n[a];
        for (std::int64_t c = 0; c < n; ++c) {
            if (!mask[c]) continue;
            const auto pos = box.coords(c);
            const std::int64_t p = (pos[a] + 1) % ncell;
            const std::int64_t nb = c + (p - pos[a]) * stride[a];
            if (!mask[nb]) continue;
            double g[3];
            for (int i = 0; i < d; ++i) {
                g[i] = (correctors[i].values[nb] - correctors[i].values[c]) / h +
                       (a == i ? 1.0 : 0.0);
            }
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) De[i * 3 + j] += g[i] * g[j] * vol;
        }
    }
    T.D = De;

    // Paper's flux form: theta*delta_ij plus cell-averaged corrector
    // gradients, faces into the solid omitted from the average.
    std::array<double, 9> Df{};
    for (int i = 0; i < d; ++i) Df[i * 3 + i] = T.theta;
    for (std::int64_t c = 0; c < n; ++c) {
        if (!mask[c]) continue;
        const auto pos = box.coords(c);
        for (int a = 0; a < d; ++a) {
            const std::int64_t ncell = box.n[a];
            for (int j = 0; j < d; ++j) {
                double acc = 0.0;
                int cnt = 0;
                std::int64_t p = (pos[a] + 1) % ncell;
                std::int64_t nb = c + (p - pos[a]) * stride[a];
                if (mask[nb]) {
                    acc += (correctors[j].values[nb] - correctors[j].values[c]) / h;
                    ++cnt;
                }
                p = (pos[a] - 1 + ncell) % ncell;
                nb = c + (p - pos[a]) * stride[a];
                if (mask[nb]) {
                    acc += (correctors[j].values[c] - correctors[j].values[nb]) / h;
                    ++cnt;
                }
                if (cnt > 0) Df[a * 3 + j] += acc / cnt * vol;
            }
        }
    }
    T.D_flux = Df;

    double gap = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            gap = std::max(gap, std::abs(Df[i * 3 + j] - De[i * 3 + j]));
    T.formula_gap = gap;

    // Both quadratures are O(h) consistent; their legitimate gap scales like
    // Theta*h. Anything far beyond that indicates an assembly bug.
    const double h_scale = 1.0 / static_cast<double>(cell.resolution);
    const double threshold = 1e-4 + 16.0 * cell.hole_radius * h_scale;
    if (gap > threshold)
        throw SolverError("effective_tensor: flux/energy formula gap " + std::to_string(gap) +
                          " exceeds consistency threshold " + std::to_string(threshold));
    return T;
}

}  // namespace perfhom
