#include "perfhom/perforated_grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "json.hpp"

namespace perfhom {

namespace {

std::int64_t round_ratio(double num, double den, const char* what) {
    const double q = num / den;
    const double r = std::round(q);
    if (r < 1.0 || std::abs(q - r) > 1e-9 * std::max(1.0, std::abs(q)))
        throw ConfigError(std::string(what) + ": ratio " + std::to_string(q) +
                          " is not a positive integer");
    return static_cast<std::int64_t>(r);
}

}  // namespace

double PerforatedGrid::cell_volume() const {
    double v = 1.0;
    for (int a = 0; a < box.dim; ++a) v *= box.h;
    return v;
}

double PerforatedGrid::gamma_eps() const {
    double s = 0.0, c = 0.0;  // Kahan
    for (const auto& f : boundary_faces) {
        const double y = f.measure - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

bool PerforatedGrid::in_security_complement(const std::array<double, 3>& x) const {
    const double L = extent();
    double dist = L;
    for (int a = 0; a < box.dim; ++a) dist = std::min({dist, x[a], L - x[a]});
    return dist > delta;
}

PerforatedGrid build_perforated_grid(double L, double h, double eps, double delta,
                                     const UnitCellSpec& cell) {
    if (L <= 0.0) throw ConfigError("perforated grid: extent L must be positive");
    if (delta < 0.0) throw ConfigError("perforated grid: security width delta must be >= 0");
    const std::int64_t per_block = round_ratio(eps, h, "perforated grid: eps/h");
    const std::int64_t blocks = round_ratio(L, eps, "perforated grid: L/eps");
    const double Theta = cell.hole_radius;
    const double r = Theta * eps;
    if (Theta > 0.0 && r < h)
        throw ConfigError("perforated grid: hole radius Theta*eps = " + std::to_string(r) +
                          " is below the grid spacing h = " + std::to_string(h));

    PerforatedGrid g;
    g.box.dim = cell.dim;
    g.box.h = h;
    const std::int64_t n = per_block * blocks;
    g.box.n = {n, n, cell.dim == 3 ? n : 1};
    g.epsilon = eps;
    g.delta = delta;
    g.hole_radius = Theta;
    g.fluid_mask.assign(static_cast<std::size_t>(g.box.cells()), 1);

    if (Theta == 0.0) return g;

    // Hole centers: eps-block centers whose closed ball of radius Theta*eps
    // lies inside Omega^delta = {x : dist(x, boundary) > delta}.
    const std::int64_t bk = (cell.dim == 3) ? blocks : 1;
    for (std::int64_t kz = 0; kz < bk; ++kz) {
        for (std::int64_t ky = 0; ky < blocks; ++ky) {
            for (std::int64_t kx = 0; kx < blocks; ++kx) {
                std::array<double, 3> c{(kx + 0.5) * eps, (ky + 0.5) * eps,
                                        cell.dim == 3 ? (kz + 0.5) * eps : 0.0};
                double dist = L;
                for (int a = 0; a < cell.dim; ++a)
                    dist = std::min({dist, c[a], L - c[a]});
                if (dist - r > delta) g.hole_centers.push_back(c);
            }
        }
    }

    // Solid cells: centers within the closed ball of some hole. Holes cannot
    // cross block boundaries (Theta < 1/4), so scan each hole's block.
    const double r2 = r * r;
    for (std::size_t hidx = 0; hidx < g.hole_centers.size(); ++hidx) {
        const auto& c = g.hole_centers[hidx];
        const std::int64_t i0 = static_cast<std::int64_t>((c[0] - eps / 2) / h + 0.5);
        const std::int64_t j0 = static_cast<std::int64_t>((c[1] - eps / 2) / h + 0.5);
        const std::int64_t k0 =
            (cell.dim == 3) ? static_cast<std::int64_t>((c[2] - eps / 2) / h + 0.5) : 0;
        const std::int64_t kk = (cell.dim == 3) ? per_block : 1;
        for (std::int64_t dk = 0; dk < kk; ++dk) {
            for (std::int64_t dj = 0; dj < per_block; ++dj) {
                for (std::int64_t di = 0; di < per_block; ++di) {
                    const std::int64_t i = i0 + di, j = j0 + dj, k = k0 + dk;
                    const double dx = g.box.center(i) - c[0];
                    const double dy = g.box.center(j) - c[1];
                    const double dz = (cell.dim == 3) ? g.box.center(k) - c[2] : 0.0;
                    if (dx * dx + dy * dy + dz * dz <= r2)
                        g.fluid_mask[g.box.index(i, j, k)] = 0;
                }
            }
        }
    }

    // Boundary faces per hole, with the per-hole measure correction factor
    // (true sphere measure) / (staircase measure).
    constexpr double pi = std::numbers::pi;
    const double true_measure =
        (cell.dim == 2) ? 2.0 * pi * r : 4.0 * pi * r * r;
    const std::array<std::array<std::int64_t, 3>, 3> dirs{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    const double raw_face = (cell.dim == 2) ? h : h * h;
    for (std::size_t hidx = 0; hidx < g.hole_centers.size(); ++hidx) {
        const auto& c = g.hole_centers[hidx];
        const std::int64_t i0 = static_cast<std::int64_t>((c[0] - eps / 2) / h + 0.5);
        const std::int64_t j0 = static_cast<std::int64_t>((c[1] - eps / 2) / h + 0.5);
        const std::int64_t k0 =
            (cell.dim == 3) ? static_cast<std::int64_t>((c[2] - eps / 2) / h + 0.5) : 0;
        const std::int64_t kk = (cell.dim == 3) ? per_block : 1;
        std::vector<BoundaryFace> faces;
        for (std::int64_t dk = 0; dk < kk; ++dk) {
            for (std::int64_t dj = 0; dj < per_block; ++dj) {
                for (std::int64_t di = 0; di < per_block; ++di) {
                    const std::int64_t i = i0 + di, j = j0 + dj, k = k0 + dk;
                    if (g.fluid_mask[g.box.index(i, j, k)]) continue;  // want solid cells
                    for (int a = 0; a < cell.dim; ++a) {
                        for (int s : {-1, +1}) {
                            const std::int64_t ii = i + s * dirs[a][0];
                            const std::int64_t jj = j + s * dirs[a][1];
                            const std::int64_t kz = k + s * dirs[a][2];
                            // neighbors stay inside the block's bounding box + 1
                            if (!g.fluid_mask[g.box.index(ii, jj, kz)]) continue;
                            BoundaryFace f;
                            f.x = {g.box.center(i), g.box.center(j),
                                   cell.dim == 3 ? g.box.center(k) : 0.0};
                            f.x[a] += s * h / 2.0;  // face center on the solid cell's side
                            for (int b = 0; b < 3; ++b) f.y[b] = (f.x[b] - c[b]) / eps;
                            if (cell.dim == 2) f.y[2] = 0.0;
                            f.hole = static_cast<std::int32_t>(hidx);
                            f.normal_axis = static_cast<std::int8_t>(a);
                            f.normal_sign = static_cast<std::int8_t>(-s);  // fluid -> solid
                            f.fluid_cell = g.box.index(ii, jj, kz);
                            f.measure = raw_face;
                            faces.push_back(f);
                        }
                    }
                }
            }
        }
        const double staircase = raw_face * static_cast<double>(faces.size());
        const double corr = (staircase > 0.0) ? true_measure / staircase : 0.0;
        for (auto& f : faces) {
            f.measure *= corr;
            g.boundary_faces.push_back(f);
        }
    }
    return g;
}

std::array<double, 3> map_to_cell_coords(const std::array<double, 3>& x, double eps,
                                         const std::array<double, 3>& hole_center) {
    std::array<double, 3> y{};
    for (int a = 0; a < 3; ++a) {
        y[a] = (x[a] - hole_center[a]) / eps;
        if (y[a] < -0.5 - 1e-12 || y[a] >= 0.5 + 1e-12)
            throw std::domain_error("map_to_cell_coords: point outside the hole's eps-block");
    }
    return y;
}

std::string geometry_summary_json(const PerforatedGrid& grid, const UnitCellSpec& cell) {
    nlohmann::json j;
    j["d"] = grid.box.dim;
    j["L"] = grid.extent();
    j["h"] = grid.box.h;
    j["epsilon"] = grid.epsilon;
    j["delta"] = grid.delta;
    j["theta_exact"] = cell.theta_exact;
    j["gamma_exact"] = cell.gamma_exact;
    j["n_holes"] = grid.hole_count();
    j["eps_gamma_eps"] = grid.epsilon * grid.gamma_eps();
    return j.dump(2);
}

}  // namespace perfhom
