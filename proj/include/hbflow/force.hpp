#ifndef HBFLOW_FORCE_HPP
#define HBFLOW_FORCE_HPP

#include "hbflow/params.hpp"

namespace hbflow {

/// Squeeze-force decomposition for one parameter set.
struct force_breakdown {
    double F0;      ///< zero-order force, > 0
    double F1;      ///< first-order force (negative on the tested grid)
    double p_R;     ///< edge pressure constant
    double F_total; ///< F0 + eps·F1 + eps·π·p_R
    double eps;     ///< aspect ratio used
};

/// Edge pressure constant fixed by the averaged boundary condition at r = 1:
///   p_R = Bπ z0(1) (2u0'(1) + u0(1)) / (2η(1)).
/// With it, the z-average of sigma_rr at the rim vanishes.
double edge_pressure_pR(const fluid_params& p);

/// Radial normal stress, truncated at first order:
///   shear layer (z > z0):  −p0 − ε p1                       (z-independent)
///   pseudo-plug (z <= z0): −p0 − ε p1
///                          + ε (2B/(ηz0)) (2u0' + u0/r) sqrt(z0²−z²).
/// The plug extra is the first-order normal-stress correction; it carries ε
/// so the averaged edge condition closes with p0(1) = ε·p_R.
double sigma_rr(const fluid_params& p, double r, double z);

/// Zero-order squeeze force, direct definition F0 = −π ∫₀¹ p0' r² dr
///                                                = π ∫₀¹ B r²/z0(r) dr.
double force_zero(const fluid_params& p);

/// Cross-check form of F0 via the change of variables r → z0:
///   8π B^{3m+1} ∫_{z0(1)}^{1} (1−s)^{3m+2} (m+1+s)² (2s²+2ms+m+m²)
///               / [s^{3m+2} (m+1)³ (m+2)³] ds.
double force_zero_z0form(const fluid_params& p);

/// First-order squeeze force, direct definition F1 = −π ∫ p1' r² dr with the
/// radial integral cut at r_min (the integrand ~ r^{2−1/(n+1)} vanishes
/// toward the axis, so the omitted sliver is negligible).
double force_first(const fluid_params& p);

/// Cross-check closed form of F1:
///   π²B [ z0(1) u0(1) (2u0(1) + u0'(1)) / η(1) − ½ ∫₀¹ η z0 r dr ].
/// The edge factor is implemented exactly as printed — the dual-quadrature
/// comparison confirms this ordering (the transposed (2u0'(1)+u0(1)) variant
/// disagrees with the definition by ~10%).
double force_first_closed(const fluid_params& p);

/// Assembled decomposition F = F0 + ε F1 + ε π p_R.
force_breakdown total_force(const fluid_params& p);

} // namespace hbflow

#endif
