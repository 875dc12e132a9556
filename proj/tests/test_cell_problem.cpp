#include <cmath>
#include <numbers>

#include "doctest.h"
#include "perfhom/cell_problem.hpp"

using namespace perfhom;
constexpr double pi = std::numbers::pi;

namespace {

std::vector<CorrectorField> solve_all(const UnitCellSpec& cell) {
    std::vector<CorrectorField> w;
    for (int j = 0; j < cell.dim; ++j) w.push_back(solve_corrector(cell, j));
    return w;
}

}  // namespace

TEST_CASE("corrector: no hole gives the zero corrector and D = I exactly") {
    auto cell = build_unit_cell(2, 0.0, 32);
    auto w = solve_all(cell);
    for (const auto& c : w)
        for (double v : c.values) CHECK(v == 0.0);
    auto T = effective_tensor(cell, w);
    CHECK(T(0, 0) == 1.0);
    CHECK(T(1, 1) == 1.0);
    CHECK(T(0, 1) == 0.0);
    CHECK(T.theta == 1.0);
    CHECK(T.formula_gap == 0.0);
}

TEST_CASE("corrector: parity and rotation symmetries of the disk") {
    auto cell = build_unit_cell(2, 0.25, 128);
    auto w1 = solve_corrector(cell, 0);
    auto w2 = solve_corrector(cell, 1);
    const std::int64_t m = cell.resolution;
    for (std::int64_t j = 0; j < m; ++j) {
        for (std::int64_t i = 0; i < m; ++i) {
            const double v = w1.values[cell.index(i, j)];
            // odd under y1 -> -y1, even under y2 -> -y2
            CHECK(v == doctest::Approx(-w1.values[cell.index(m - 1 - i, j)]).epsilon(0).scale(1).epsilon(1e-8));
            CHECK(std::abs(v - w1.values[cell.index(i, m - 1 - j)]) < 1e-8);
            // omega_2 is omega_1 composed with the 90 degree rotation
            CHECK(std::abs(v - w2.values[cell.index(j, i)]) < 1e-8);
        }
    }
}

TEST_CASE("effective tensor: Maxwell dilute value at Theta = 0.1") {
    auto cell = build_unit_cell(2, 0.1, 256);
    auto T = effective_tensor(cell, solve_all(cell));
    const double f = pi * 0.01;
    const double maxwell = (1.0 - f) / (1.0 + f);  // 0.9390819440971575
    CHECK(std::abs(T(0, 0) - T(1, 1)) <= 1e-6);
    CHECK(std::abs(T(0, 1)) <= 1e-6);
    CHECK(std::abs(T(1, 0)) <= 1e-6);
    CHECK(std::abs(T(0, 0) / maxwell - 1.0) <= 0.02);
}

TEST_CASE("effective tensor: cross-check against the independent prototype") {
    // Values computed with an independent sparse-direct implementation of the
    // same discretization (tolerance covers the differing solver paths).
    auto cell = build_unit_cell(2, 0.25, 64);
    CHECK(cell.theta_discrete() == doctest::Approx(0.801757812500).epsilon(1e-12));
    auto T = effective_tensor(cell, solve_all(cell));
    CHECK(T(0, 0) == doctest::Approx(0.66051535).epsilon(2e-6));
    CHECK(T.formula_gap == doctest::Approx(3.569e-3).epsilon(0.02));

    auto cell16 = build_unit_cell(2, 0.25, 16);
    CHECK(cell16.theta_discrete() == doctest::Approx(0.796875).epsilon(1e-12));
    auto T16 = effective_tensor(cell16, solve_all(cell16));
    CHECK(T16(0, 0) == doctest::Approx(0.6326818514644174).epsilon(2e-6));
}

TEST_CASE("effective tensor: regression golden at Theta = 0.25, m = 256") {
    auto cell = build_unit_cell(2, 0.25, 256);
    auto T = effective_tensor(cell, solve_all(cell));
    CHECK(std::abs(T(0, 0) - T(1, 1)) <= 1e-6);
    CHECK(std::abs(T(0, 1)) <= 1e-6);
    // golden number (energy form); Richardson over m in {64,128,256} gives
    // ~0.6716, consistent with lattice-of-disks references.
    CHECK(T(0, 0) == doctest::Approx(0.66888840).epsilon(3e-6));
}

TEST_CASE("effective tensor: bounds, symmetry idempotence, monotonicity in Theta") {
    double prev = 2.0;
    for (double Theta : {0.0, 0.05, 0.1, 0.2, 0.25}) {
        auto cell = build_unit_cell(2, Theta, 64);
        auto T = effective_tensor(cell, solve_all(cell));
        CHECK(T.min_eigenvalue() > 0.0);
        CHECK(T.max_eigenvalue() <= T.theta + 1e-12);
        CHECK(T(0, 1) == T(1, 0));
        CHECK(T(0, 0) < prev);
        prev = T(0, 0);
    }
}

TEST_CASE("effective tensor: formula gap halves when m doubles") {
    double prev = -1.0;
    for (int m : {64, 128, 256}) {
        auto cell = build_unit_cell(2, 0.25, m);
        auto T = effective_tensor(cell, solve_all(cell));
        if (prev > 0.0) {
            const double ratio = T.formula_gap / prev;
            CHECK(ratio >= 0.4);
            CHECK(ratio <= 0.6);
        }
        prev = T.formula_gap;
    }
}

TEST_CASE("effective tensor: 3d coarse sanity") {
    auto cell = build_unit_cell(3, 0.2, 16);
    auto T = effective_tensor(cell, solve_all(cell));
    CHECK(T.dim == 3);
    CHECK(std::abs(T(0, 0) - T(1, 1)) <= 1e-8);
    CHECK(std::abs(T(1, 1) - T(2, 2)) <= 1e-8);
    CHECK(std::abs(T(0, 1)) <= 1e-8);
    CHECK(T.min_eigenvalue() > 0.0);
    CHECK(T.max_eigenvalue() <= T.theta + 1e-12);
}
