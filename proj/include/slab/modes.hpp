#pragma once

#include <array>
#include <span>
#include <vector>

#include "slab/boundary.hpp"
#include "slab/core.hpp"
#include "slab/transverse.hpp"

namespace slab {

struct SlabMode {
    PhysicalParams params;
    PhaseConfig phases;
    cplx K_root;
    CoefficientVector A;
    TransverseMode transverse;
};

using Spinor = std::array<cplx, 4>;

/// Components of the z-dependent factors: Phi1 = f c[0], Phi2 = g c[1], Phi3 = f c[2], Phi4 = g c[3].
Spinor longitudinal_factors(const SlabMode& mode, double z);

/// Phi_1..Phi_4 at (y, z). Throws DomainError for |z| > a or k = +-p with a nonzero g.
Spinor assemble_phi(const SlabMode& mode, double y, double z);

/// (|Phi1|^2 - |Phi3|^2) - (|Phi2|^2 - |Phi4|^2).
double current_Jz(const SlabMode& mode, double y, double z);

/// J^z on a y-grid at fixed z (dispatched kernels).
std::vector<double> current_Jz_grid(const SlabMode& mode, std::span<const double> ys, double z);

struct BoundaryReport {
    double residual = 0.0;
    double boundary_max = 0.0;
    double interior_max = 0.0;
    double norm_scale = 0.0;
    bool interior_current_vanishes = false;  // residual is relative to norm_scale
    bool lower_pair_vanishes = false;        // g == 0 on the grid
};

/// max |J^z| on z = +-a over max |J^z| in the interior (or over the density scale when that vanishes).
BoundaryReport boundary_residual(const SlabMode& mode, std::span<const double> y_grid);

/// max over y of |Phi3 - e^{i rho} Phi1|, |Phi4 - e^{i sigma} Phi2| at z = -a and the mu, nu pair at z = +a,
/// relative to max |Phi| across the slab.
double phase_condition_residual(const SlabMode& mode, std::span<const double> y_grid);

/// 41 points spanning t in [-6, 6].
std::vector<double> default_y_grid(const TransverseMode& t, int points = 41);

/// Smallest a > 0 with e^{2 i k a} = K.
double half_width_for_root(double k, cplx K);

/// One mode per null-space basis vector at K_root. `params.half_width` should satisfy e^{2ika} = K_root.
std::vector<SlabMode> certified_modes(const PhysicalParams& params, const PhaseConfig& phases, cplx K_root,
                                      int landau_level);

}  // namespace slab
