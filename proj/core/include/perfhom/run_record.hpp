#pragma once

#include <array>
#include <string>
#include <vector>

#include "perfhom/grid.hpp"

namespace perfhom {

/// Per-step bookkeeping row. Row 0 is the initial state (zero inflow, dt 0);
/// row k holds the inflow rates and dt used by the step ending at time t, so
/// mass(k) - mass(k-1) = dt_used(k) * inflow(k) holds exactly per species pair.
struct RunRow {
    long step = 0;
    double t = 0.0;
    std::array<double, 3> mass{};
    std::array<double, 3> inflow{};  // sum over faces of d_i*eps*psi_i*measure
    double min_a = 0.0;
    double l2l2_partial = 0.0;  // running sum of dt * int(a_i^2) over all species
    double dt_used = 0.0;
};

struct RunRecord {
    std::vector<RunRow> rows;
    /// Largest per-step relative mass-balance residual observed for the
    /// (a1+a3) and (a2+a3) pairs.
    double max_balance_residual = 0.0;
    /// Smallest value over all species, cells and steps.
    double min_value = 0.0;
};

/// One stored state: extension-by-zero fields on the full grid.
struct Snapshot {
    double t = 0.0;
    std::array<Field, 3> a{};
};

/// CSV with the pinned column set, '.' decimal, LF line endings.
void write_run_record_csv(const RunRecord& rec, const std::string& path);

/// Flat little-endian binary dump (row-major doubles) plus a JSON sidecar
/// {t, epsilon, h, shape}. The macro solver writes epsilon = 0.
void write_snapshot(const Snapshot& snap, const Box& box, double epsilon,
                    const std::string& path_prefix);

}  // namespace perfhom
