#pragma once

#include <vector>

#include "perfhom/flux.hpp"
#include "perfhom/operators.hpp"
#include "perfhom/perforated_grid.hpp"
#include "perfhom/run_record.hpp"
#include "perfhom/species_state.hpp"

namespace perfhom {

struct StepOutcome {
    double dt_used = 0.0;
    std::array<double, 3> inflow_rate{};  // sum_f pref_i*eps*psi_i*measure at step time
    double min_value = 0.0;
    int halvings = 0;
};

/// IMEX integrator for the eps-scale system on the perforated grid: explicit
/// shared-r reaction, explicit hole-boundary influx, implicit backward-Euler
/// diffusion with homogeneous Neumann on the outer boundary. One shared
/// reaction grid applied with opposite signs makes the discrete mass balance
/// exact; a mean correction after each CG solve removes the solver-tolerance
/// mass drift.
class MicroSolver {
public:
    MicroSolver(const PerforatedGrid& grid, const PhysicalParams& params,
                const BoundaryFlux& flux, FluxConvention convention = FluxConvention::paper,
                int threads = 1);

    /// Advance one step of at most params.dt (clipped to remaining if given).
    /// Negative values beyond -1e-14 trigger dt halving, up to 6 times.
    StepOutcome step(SpeciesState& state, double dt_cap) const;

    /// Advance to params.T recording masses, inflows and diagnostics; stores
    /// extension-by-zero snapshots at the requested times.
    RunRecord run(SpeciesState& state, const std::vector<double>& snapshot_times,
                  std::vector<Snapshot>* snapshots) const;

    const PerforatedGrid& grid() const { return grid_; }
    const PhysicalParams& params() const { return params_; }
    double source_prefactor(int i) const {
        return convention_ == FluxConvention::paper ? params_.d[i] : 1.0;
    }

private:
    bool attempt(SpeciesState& state, double dt, StepOutcome& out) const;

    const PerforatedGrid& grid_;
    PhysicalParams params_;
    BoundaryFlux flux_;
    FluxConvention convention_;
    int threads_;
    MaskedOperator op_;  // coefficient-1 masked Neumann Laplacian
};

double cg_tolerance_implicit();  // 1e-9, below all acceptance tolerances

}  // namespace perfhom
