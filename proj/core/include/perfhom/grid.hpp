#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace perfhom {

/// Thrown on invalid user-supplied parameters; the message names the field.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when an iterative solver fails to converge.
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Uniform cell-centered grid over [0, n[a]*h]^dim, x-fastest linear indexing.
struct Box {
    int dim = 2;
    std::array<std::int64_t, 3> n{1, 1, 1};  // cells per axis; n[a]=1 for a >= dim
    double h = 1.0;

    std::int64_t cells() const { return n[0] * n[1] * n[2]; }

    std::int64_t index(std::int64_t i, std::int64_t j, std::int64_t k = 0) const {
        return i + n[0] * (j + n[1] * k);
    }

    std::array<std::int64_t, 3> coords(std::int64_t idx) const {
        std::array<std::int64_t, 3> c;
        c[0] = idx % n[0];
        idx /= n[0];
        c[1] = idx % n[1];
        c[2] = idx / n[1];
        return c;
    }

    double center(std::int64_t i) const { return (static_cast<double>(i) + 0.5) * h; }

    double extent(int axis) const { return static_cast<double>(n[axis]) * h; }
};

using Mask = std::vector<std::uint8_t>;  // 1 = fluid, 0 = solid
using Field = std::vector<double>;       // full-grid storage, solid entries zero

inline std::int64_t count_fluid(const Mask& mask) {
    std::int64_t c = 0;
    for (auto m : mask) c += m;
    return c;
}

}  // namespace perfhom
