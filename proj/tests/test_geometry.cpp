#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "perfhom/perforated_grid.hpp"
#include "perfhom/unit_cell.hpp"

using namespace perfhom;
constexpr double pi = std::numbers::pi;

TEST_CASE("unit cell: no hole") {
    auto cell = build_unit_cell(2, 0.0, 32);
    CHECK(cell.theta_exact == 1.0);
    CHECK(cell.gamma_exact == 0.0);
    CHECK(count_fluid(cell.fluid_mask) == 32 * 32);
}

TEST_CASE("unit cell: analytic measures at Theta just below 1/4") {
    auto cell = build_unit_cell(2, 0.25, 64);
    CHECK(cell.theta_exact == doctest::Approx(1.0 - pi / 16.0).epsilon(1e-9));
    CHECK(cell.gamma_exact == doctest::Approx(pi / 2.0).epsilon(1e-9));
}

TEST_CASE("unit cell: discrete fluid fraction converges first order") {
    const double Theta = 0.25;
    auto cell = build_unit_cell(2, Theta, 64);
    const double target = 1.0 - pi * Theta * Theta;
    CHECK(std::abs(cell.theta_discrete() - target) <= 2.0 / 64.0);
    auto fine = build_unit_cell(2, Theta, 512);
    CHECK(std::abs(fine.theta_discrete() - target) <= 2.0 / 512.0);
}

TEST_CASE("unit cell: rejects bad parameters naming the field") {
    CHECK_THROWS_WITH_AS(build_unit_cell(4, 0.1, 32), doctest::Contains("dimension"),
                         ConfigError);
    CHECK_THROWS_WITH_AS(build_unit_cell(2, 0.3, 32), doctest::Contains("hole_radius"),
                         ConfigError);
    CHECK_THROWS_WITH_AS(build_unit_cell(2, 0.1, 4), doctest::Contains("resolution"),
                         ConfigError);
}

TEST_CASE("unit cell: 3d measures") {
    auto cell = build_unit_cell(3, 0.2, 16);
    CHECK(cell.theta_exact == doctest::Approx(1.0 - 4.0 / 3.0 * pi * 0.008));
    CHECK(cell.gamma_exact == doctest::Approx(4.0 * pi * 0.04));
    CHECK(std::abs(cell.theta_discrete() - cell.theta_exact) < 2.0 / 16.0);
}

TEST_CASE("perforated grid: hole count and centers (security zone)") {
    auto cell = build_unit_cell(2, 0.25, 16);
    auto grid = build_perforated_grid(1.0, 1.0 / 64.0, 0.25, 0.3, cell);
    REQUIRE(grid.hole_count() == 4);
    std::set<double> xs;
    for (const auto& c : grid.hole_centers) {
        xs.insert(c[0]);
        xs.insert(c[1]);
    }
    CHECK(xs == std::set<double>{0.375, 0.625});
}

TEST_CASE("perforated grid: security zone covering Omega is not an error") {
    auto cell = build_unit_cell(2, 0.25, 16);
    auto grid = build_perforated_grid(1.0, 1.0 / 64.0, 0.25, 0.5, cell);
    CHECK(grid.hole_count() == 0);
    CHECK(grid.fluid_cells() == grid.box.cells());
}

TEST_CASE("perforated grid: per-hole corrected measure is exact") {
    const double Theta = 0.24;
    auto cell = build_unit_cell(2, Theta, 16);
    auto grid = build_perforated_grid(1.0, 1.0 / 128.0, 0.125, 0.1, cell);
    REQUIRE(grid.hole_count() > 0);
    std::vector<double> per_hole(grid.hole_count(), 0.0);
    for (const auto& f : grid.boundary_faces) per_hole[f.hole] += f.measure;
    const double exact = 2.0 * pi * Theta * grid.epsilon;
    for (double m : per_hole) CHECK(m == doctest::Approx(exact).epsilon(1e-13));
}

TEST_CASE("perforated grid: eps*|Gamma_eps| approaches 2*pi*Theta*|Omega^delta|") {
    const double Theta = 0.24, delta = 0.1575, L = 1.0;
    auto cell = build_unit_cell(2, Theta, 16);
    const double target = 2.0 * pi * Theta * (L - 2 * delta) * (L - 2 * delta);
    double prev = -1.0;
    for (double eps : {1.0 / 8, 1.0 / 16, 1.0 / 32}) {
        auto grid = build_perforated_grid(L, eps / 16.0, eps, delta, cell);
        const double err = std::abs(grid.epsilon * grid.gamma_eps() - target);
        if (prev >= 0.0) CHECK(err <= prev + 1e-12);
        prev = err;
        // discrete analog of the hole-count bound
        const double epsd = std::pow(eps, 2);
        CHECK(epsd * static_cast<double>(grid.hole_count()) <= L * L + 1e-12);
    }
}

TEST_CASE("perforated grid: resolution errors and divisibility") {
    auto cell = build_unit_cell(2, 0.01, 16);
    CHECK_THROWS_AS(build_perforated_grid(1.0, 1.0 / 64.0, 0.125, 0.0, cell), ConfigError);
    auto ok = build_unit_cell(2, 0.2, 16);
    CHECK_THROWS_AS(build_perforated_grid(1.0, 1.0 / 50.0, 0.125, 0.0, ok), ConfigError);
    CHECK_THROWS_AS(build_perforated_grid(1.0, 1.0 / 48.0, 1.0 / 7.0, 0.0, ok), ConfigError);
    CHECK_THROWS_AS(build_perforated_grid(1.0, 1.0 / 64.0, 0.3, 0.0, ok), ConfigError);
}

TEST_CASE("perforated grid: refining h keeps hole centers, masks refine") {
    auto cell = build_unit_cell(2, 0.2, 16);
    auto a = build_perforated_grid(1.0, 1.0 / 64.0, 0.125, 0.1, cell);
    auto b = build_perforated_grid(1.0, 1.0 / 128.0, 0.125, 0.1, cell);
    REQUIRE(a.hole_count() == b.hole_count());
    for (std::size_t i = 0; i < a.hole_centers.size(); ++i)
        CHECK(a.hole_centers[i] == b.hole_centers[i]);
    CHECK(std::abs(a.fluid_volume() - b.fluid_volume()) < 4.0 * a.box.h);
}

TEST_CASE("perforated grid: mask symmetric under box reflections") {
    auto cell = build_unit_cell(2, 0.2, 16);
    auto g = build_perforated_grid(1.0, 1.0 / 96.0, 1.0 / 6.0, 0.1, cell);
    const auto n = g.box.n[0];
    for (std::int64_t j = 0; j < n; ++j)
        for (std::int64_t i = 0; i < n; ++i) {
            CHECK(g.fluid_mask[g.box.index(i, j)] ==
                  g.fluid_mask[g.box.index(n - 1 - i, j)]);
            CHECK(g.fluid_mask[g.box.index(i, j)] ==
                  g.fluid_mask[g.box.index(j, i)]);
        }
}

TEST_CASE("map_to_cell_coords") {
    const double eps = 0.125;
    std::array<double, 3> center{0.1875, 0.1875, 0.0};
    auto y0 = map_to_cell_coords(center, eps, center);
    CHECK(y0 == std::array<double, 3>{0.0, 0.0, 0.0});
    const double Theta = 0.2;
    auto y1 = map_to_cell_coords({center[0] + Theta * eps, center[1], 0.0}, eps, center);
    CHECK(y1[0] == doctest::Approx(Theta));
    CHECK(y1[1] == 0.0);
    CHECK_THROWS_AS(map_to_cell_coords({0.9, 0.9, 0.0}, eps, center), std::domain_error);
}

TEST_CASE("boundary face centers map near the hole radius") {
    const double Theta = 0.2, eps = 0.125, h = eps / 16.0;
    auto cell = build_unit_cell(2, Theta, 16);
    auto grid = build_perforated_grid(1.0, h, eps, 0.1, cell);
    REQUIRE(!grid.boundary_faces.empty());
    const double band = h / eps;
    for (const auto& f : grid.boundary_faces) {
        const double rho = std::hypot(f.y[0], f.y[1]);
        CHECK(rho >= Theta - band);
        CHECK(rho <= Theta + band);
        // y from the face record agrees with the map
        auto y = map_to_cell_coords(f.x, eps, grid.hole_centers[f.hole]);
        CHECK(y[0] == doctest::Approx(f.y[0]));
        CHECK(y[1] == doctest::Approx(f.y[1]));
    }
}

TEST_CASE("geometry summary json") {
    auto cell = build_unit_cell(2, 0.2, 16);
    auto grid = build_perforated_grid(1.0, 1.0 / 64.0, 0.125, 0.1, cell);
    auto j = nlohmann::json::parse(geometry_summary_json(grid, cell));
    CHECK(j["d"] == 2);
    CHECK(j["L"] == 1.0);
    CHECK(j["n_holes"] == grid.hole_count());
    CHECK(j["eps_gamma_eps"].get<double>() ==
          doctest::Approx(grid.epsilon * grid.gamma_eps()));
}
