#include "perfhom/operators.hpp"

#include <cmath>
#include <cstring>

namespace perfhom {

bool CoeffTensor::is_diagonal() const {
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (i != j && (*this)(i, j) != 0.0) return false;
    return true;
}

void CoeffTensor::require_spd() const {
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            if (std::abs((*this)(i, j) - (*this)(j, i)) > 1e-14)
                throw ConfigError("diffusion tensor must be symmetric");
    // Sylvester minors for d <= 3
    const auto& D = *this;
    if (D(0, 0) <= 0.0) throw ConfigError("diffusion tensor must be positive definite");
    if (dim >= 2 && D(0, 0) * D(1, 1) - D(0, 1) * D(1, 0) <= 0.0)
        throw ConfigError("diffusion tensor must be positive definite");
    if (dim == 3) {
        const double det = D(0, 0) * (D(1, 1) * D(2, 2) - D(1, 2) * D(2, 1)) -
                           D(0, 1) * (D(1, 0) * D(2, 2) - D(1, 2) * D(2, 0)) +
                           D(0, 2) * (D(1, 0) * D(2, 1) - D(1, 1) * D(2, 0));
        if (det <= 0.0) throw ConfigError("diffusion tensor must be positive definite");
    }
}

MaskedOperator::MaskedOperator(Box box, const Mask* mask, CoeffTensor coeff, BoundaryTag tag)
    : box_(box), mask_(mask), coeff_(coeff), tag_(tag) {
    if (coeff_.a != std::array<double, 9>{}) coeff_.require_spd();
    fluid_count_ = mask_ ? count_fluid(*mask_) : box_.cells();
}

void MaskedOperator::apply(const double* x, double* y) const {
    std::memset(y, 0, sizeof(double) * static_cast<std::size_t>(box_.cells()));
    apply_diagonal_part(x, y);
    for (int a = 0; a < box_.dim; ++a)
        for (int b = a + 1; b < box_.dim; ++b)
            if (coeff_(a, b) != 0.0) apply_cross_pair(x, y, a, b);
    if (mask_) {
        const auto n = box_.cells();
        for (std::int64_t i = 0; i < n; ++i)
            if (!(*mask_)[i]) y[i] = 0.0;
    }
}

void MaskedOperator::apply_diagonal_part(const double* x, double* y) const {
    const auto n0 = box_.n[0], n1 = box_.n[1], n2 = box_.n[2];
    const double inv_h2 = 1.0 / (box_.h * box_.h);
    const std::int64_t stride[3] = {1, n0, n0 * n1};
    const std::int64_t ncell[3] = {n0, n1, n2};
    const bool periodic = tag_ == BoundaryTag::periodic;

    for (std::int64_t k = 0; k < n2; ++k) {
        for (std::int64_t j = 0; j < n1; ++j) {
            const std::int64_t row = box_.index(0, j, k);
            for (std::int64_t i = 0; i < n0; ++i) {
                const std::int64_t c = row + i;
                if (mask_ && !(*mask_)[c]) continue;
                const std::int64_t pos[3] = {i, j, k};
                double acc = 0.0;
                for (int a = 0; a < box_.dim; ++a) {
                    const double ca = coeff_(a, a) * inv_h2;
                    for (int s : {-1, +1}) {
                        std::int64_t p = pos[a] + s;
                        std::int64_t nb;
                        if (p < 0 || p >= ncell[a]) {
                            if (!periodic) continue;
                            p = (p + ncell[a]) % ncell[a];
                            nb = c + (p - pos[a]) * stride[a];
                        } else {
                            nb = c + s * stride[a];
                        }
                        if (mask_ && !(*mask_)[nb]) continue;
                        acc += ca * (x[c] - x[nb]);
                    }
                }
                y[c] += acc;
            }
        }
    }
}

// Cross terms D_ab * (du/da dv/db + du/db dv/da) sampled at cell corners in
// the (a,b) plane; each corner's gradient component is the mean of the two
// adjacent face differences, missing differences (boundary or solid) count
// as zero, which keeps the quadratic form symmetric.
void MaskedOperator::apply_cross_pair(const double* x, double* y, int axis_a, int axis_b) const {
    const auto n0 = box_.n[0], n1 = box_.n[1];
    const std::int64_t stride[3] = {1, n0, n0 * n1};
    const std::int64_t ncell[3] = {box_.n[0], box_.n[1], box_.n[2]};
    const double w = coeff_(axis_a, axis_b) / (box_.h * box_.h);
    const bool periodic = tag_ == BoundaryTag::periodic;
    const std::int64_t sa = stride[axis_a], sb = stride[axis_b];

    // Corner (in the a-b plane) at the "low" corner of logical cell position
    // (pa, pb); the four surrounding cells are offsets {-1,0} x {-1,0}.
    const int axis_c = 3 - axis_a - axis_b;  // the remaining axis (unused in 2D)
    const std::int64_t nc = (box_.dim == 3) ? ncell[axis_c] : 1;
    const std::int64_t corners_a = ncell[axis_a] + (periodic ? 0 : 1);
    const std::int64_t corners_b = ncell[axis_b] + (periodic ? 0 : 1);

    auto cell_at = [&](std::int64_t pa, std::int64_t pb, std::int64_t pc) -> std::int64_t {
        if (periodic) {
            pa = (pa + ncell[axis_a]) % ncell[axis_a];
            pb = (pb + ncell[axis_b]) % ncell[axis_b];
        } else if (pa < 0 || pa >= ncell[axis_a] || pb < 0 || pb >= ncell[axis_b]) {
            return -1;
        }
        return pa * sa + pb * sb + (box_.dim == 3 ? pc * stride[axis_c] : 0);
    };

    for (std::int64_t pc = 0; pc < nc; ++pc) {
        for (std::int64_t cb = 0; cb < corners_b; ++cb) {
            for (std::int64_t ca = 0; ca < corners_a; ++ca) {
                // cells around corner (ca, cb): (ca-1,cb-1),(ca,cb-1),(ca-1,cb),(ca,cb)
                const std::int64_t c00 = cell_at(ca - 1, cb - 1, pc);
                const std::int64_t c10 = cell_at(ca, cb - 1, pc);
                const std::int64_t c01 = cell_at(ca - 1, cb, pc);
                const std::int64_t c11 = cell_at(ca, cb, pc);
                auto val = [&](std::int64_t c) -> double {
                    return (c >= 0 && fluid(c)) ? x[c] : 0.0;
                };
                auto have = [&](std::int64_t c) { return c >= 0 && fluid(c); };
                // a-direction differences on the two b-sides of the corner
                double ga = 0.0;
                if (have(c00) && have(c10)) ga += 0.5 * (val(c10) - val(c00));
                if (have(c01) && have(c11)) ga += 0.5 * (val(c11) - val(c01));
                double gb = 0.0;
                if (have(c00) && have(c01)) gb += 0.5 * (val(c01) - val(c00));
                if (have(c10) && have(c11)) gb += 0.5 * (val(c11) - val(c10));
                if (ga == 0.0 && gb == 0.0) continue;
                // d/dv of [ga(u) gb(v) + gb(u) ga(v)]: scatter to the cells
                if (have(c00) && have(c01)) {  // gb's pair (low a side)
                    y[c01] += w * 0.5 * ga;
                    y[c00] -= w * 0.5 * ga;
                }
                if (have(c10) && have(c11)) {
                    y[c11] += w * 0.5 * ga;
                    y[c10] -= w * 0.5 * ga;
                }
                if (have(c00) && have(c10)) {  // ga's pair (low b side)
                    y[c10] += w * 0.5 * gb;
                    y[c00] -= w * 0.5 * gb;
                }
                if (have(c01) && have(c11)) {
                    y[c11] += w * 0.5 * gb;
                    y[c01] -= w * 0.5 * gb;
                }
            }
        }
    }
}

double compensated_sum(const double* v, std::int64_t n) {
    double s = 0.0, c = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        const double y = v[i] - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

double integrate_field(const double* field, const Mask* mask, const Box& box) {
    double s = 0.0, c = 0.0;
    const auto n = box.cells();
    for (std::int64_t i = 0; i < n; ++i) {
        if (mask && !(*mask)[i]) continue;
        const double y = field[i] - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    double vol = 1.0;
    for (int a = 0; a < box.dim; ++a) vol *= box.h;
    return s * vol;
}

namespace {

double dot_fluid(const double* a, const double* b, const Mask* mask, std::int64_t n) {
    double s = 0.0;
    if (mask) {
        for (std::int64_t i = 0; i < n; ++i)
            if ((*mask)[i]) s += a[i] * b[i];
    } else {
        for (std::int64_t i = 0; i < n; ++i) s += a[i] * b[i];
    }
    return s;
}

void project_mean(double* v, const Mask* mask, std::int64_t n, std::int64_t nfluid) {
    double s = 0.0, c = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        if (mask && !(*mask)[i]) continue;
        const double y = v[i] - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    const double mean = s / static_cast<double>(nfluid);
    for (std::int64_t i = 0; i < n; ++i)
        if (!mask || (*mask)[i]) v[i] -= mean;
}

}  // namespace

SolveReport cg_solve(const MaskedOperator& A, const double* b, double* x, double tol,
                     int maxit, Nullspace ns, double sigma, double scale,
                     const std::function<void(const double*)>& observer) {
    const std::int64_t n = A.size();
    const Mask* mask = A.mask();
    const std::int64_t nfluid = A.fluid_count();

    std::vector<double> r(n, 0.0), p(n, 0.0), Ap(n, 0.0), bp;
    const double* rhs = b;
    if (ns == Nullspace::project_mean) {
        bp.assign(b, b + n);
        if (mask)
            for (std::int64_t i = 0; i < n; ++i)
                if (!(*mask)[i]) bp[i] = 0.0;
        project_mean(bp.data(), mask, n, nfluid);
        project_mean(x, mask, n, nfluid);
        rhs = bp.data();
    }

    auto apply_shifted = [&](const double* in, double* out) {
        A.apply(in, out);
        for (std::int64_t i = 0; i < n; ++i) {
            if (mask && !(*mask)[i]) {
                out[i] = 0.0;
                continue;
            }
            out[i] = sigma * in[i] + scale * out[i];
        }
    };

    const double bnorm = std::sqrt(dot_fluid(rhs, rhs, mask, n));
    SolveReport rep;
    if (bnorm == 0.0) {
        for (std::int64_t i = 0; i < n; ++i) x[i] = 0.0;
        rep.converged = true;
        return rep;
    }

    apply_shifted(x, Ap.data());
    for (std::int64_t i = 0; i < n; ++i)
        r[i] = (!mask || (*mask)[i]) ? rhs[i] - Ap[i] : 0.0;
    if (ns == Nullspace::project_mean) project_mean(r.data(), mask, n, nfluid);

    double rr = dot_fluid(r.data(), r.data(), mask, n);
    p = r;
    int it = 0;
    while (it < maxit && std::sqrt(rr) > tol * bnorm) {
        apply_shifted(p.data(), Ap.data());
        const double pAp = dot_fluid(p.data(), Ap.data(), mask, n);
        if (pAp <= 0.0) break;  // loss of positive definiteness / stagnation
        const double alpha = rr / pAp;
        for (std::int64_t i = 0; i < n; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * Ap[i];
        }
        if (ns == Nullspace::project_mean && (it % 32) == 31) {
            project_mean(r.data(), mask, n, nfluid);
            project_mean(x, mask, n, nfluid);
        }
        const double rr_new = dot_fluid(r.data(), r.data(), mask, n);
        const double beta = rr_new / rr;
        rr = rr_new;
        for (std::int64_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
        ++it;
        if (observer) observer(x);
    }
    if (ns == Nullspace::project_mean) project_mean(x, mask, n, nfluid);
    rep.iterations = it;
    rep.rel_residual = std::sqrt(rr) / bnorm;
    rep.converged = rep.rel_residual <= tol;
    return rep;
}

}  // namespace perfhom
