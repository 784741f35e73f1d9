#ifndef HBFLOW_FIRST_ORDER_HPP
#define HBFLOW_FIRST_ORDER_HPP

#include "hbflow/params.hpp"

#include <optional>

namespace hbflow {

/// First-order coefficient bundle at a radius.
struct first_order_coefficients {
    double r;
    double eta;      ///< scalar strain-rate magnitude of the plug
    double g;        ///< shear-stress integration function g(r)
    double p1_prime; ///< dp1/dr
    double p1;       ///< first-order pressure, p1(1) = 0
};

/// Radius below which the first-order radial quantities enter the divergent
/// small-r regime; operations that cannot extend below it say so explicitly.
inline constexpr double r_min = 1e-3;

/// Scalar strain-rate magnitude of the pseudo-plug,
///   η = 2 sqrt[(u0')² + (u0/r)² + u0'·u0/r] > 0.
/// Throws std::domain_error at r = 0 (use the series route instead).
double eta_of_r(const fluid_params& p, double r);

/// Shear-stress integration function
///   g = −(πB/2) [ dΦ/dr + (z0/(ηr))(u0' − u0/r) ],  Φ = (z0/η)(2u0' + u0/r).
/// The outer dΦ/dr is a central difference with step h = 1e-5·max(r, 0.1),
/// clamped to r/2 so the stencil stays inside (0,1); at the rim (r+h > 1) a
/// second-order one-sided backward stencil is used so g(1) stays evaluable.
/// Throws std::domain_error for r <= 1e-8 (series regime) or r > 1.
double g_of_r(const fluid_params& p, double r);

/// First-order pressure gradient p1' = −πBη z0'/2 − 2 g u0'.
double p1_prime(const fluid_params& p, double r);

/// First-order pressure p1(r) = −∫_r^1 p1'(ρ) dρ with p1(1) = 0. Below
/// r_min the value is frozen at p1(r_min) (divergent regime).
double p1_of_r(const fluid_params& p, double r);

/// All per-radius first-order coefficients in one call.
first_order_coefficients first_order_at(const fluid_params& p, double r);

/// First-order velocity, shear branch (valid for z >= z0):
///   u¹ = κ { p1'/(n+1) [(z−z0)^{1/n}(z+nz0) − (1−z0)^{1/n}(1+nz0)]
///            + g [(z−z0)^{1/n} − (1−z0)^{1/n}] },   κ = (B/z0)^{1/n−1}.
double u_first_shear(const fluid_params& p, double r, double z);

/// First-order velocity, plug branch (valid for z <= z0):
///   u¹ = η sqrt(z0²−z²) − κ [ p1'(1−z0)^{1/n}(1+nz0)/(n+1) + g(1−z0)^{1/n} ].
double u_first_plug(const fluid_params& p, double r, double z);

/// First-order velocity with branch dispatch at z0; continuous there by
/// construction (both branches take the same value).
double u_first(const fluid_params& p, double r, double z);

/// First-order shear stress, shear branch: τ¹ = z·p1' + g.
double tau_rz_first_shear(const fluid_params& p, double r, double z);

/// First-order shear stress, plug branch:
///   τ¹ = −B (zS + z0² asin(z/z0)) [Ψ' + (u0'−u0/r)/(r η z0)]
///        − 2BΨ z0 z0' asin(z/z0) + p1' z,
/// with Ψ = (2u0'+u0/r)/(η z0), S = sqrt(z0²−z²), Ψ' differenced like dΦ/dr.
/// Evaluable at z = z0 (asin → π/2, S → 0); zero at z = 0.
double tau_rz_first_plug(const fluid_params& p, double r, double z);

/// First-order shear stress with branch dispatch at z0.
double tau_rz_first(const fluid_params& p, double r, double z);

/// First-order pressure inside the plug,
///   p^{p,1} = −(2B/(ηz0))(u0' + u0/r) sqrt(z0²−z²) + p1(r),
/// equal to p1(r) at z = z0. Throws std::domain_error for z > z0 (the shear
/// region has the z-independent p^{s,1} = p1(r)).
double p_first_plug(const fluid_params& p, double r, double z);

/// Residual of the first-order flow-rate constraint (zero net first-order
/// flux with no slip),
///   ηπz0²/4 − κ(1−z0)^{1/n} [ p1'(2n²z0²+2nz0+n+1)/((n+1)(2n+1))
///                             + g(nz0+1)/(n+1) ],
/// identically zero for consistent (g, p1'); exposed as a diagnostic.
double flow_rate_residual_first(const fluid_params& p, double r);

/// Residual of the yield identity inside the plug,
///   τ_rr² + τ_θθ² + τ_rr τ_θθ + (τ_rz⁰)² − B²,
/// with τ_rr = (2B/(ηz0)) u0' S, τ_θθ = (2B/(ηz0)) (u0/r) S, S = sqrt(z0²−z²).
/// Zero for z <= z0 (the plug sits exactly at the yield point).
double plug_yield_residual(const fluid_params& p, double r, double z);

/// Second invariant of the stress on the upper plate, truncated at first
/// order: τ(r,1) = B/z0(r) − ε(p1' + g). Compare against B to classify the
/// plate contact as yielded/unyielded. Throws std::domain_error for
/// r <= r_min (use plate_stress_series there).
double plate_stress(const fluid_params& p, double r);

/// Truncated small-r series of the plate stress components.
struct series_pair {
    double tau0_series; ///< series of τ⁰(r,1) (negative, → −B as r → 0)
    double tau1_series; ///< leading divergent term of τ¹(r,1) (~ r^{−1/(n+1)})
};
series_pair plate_stress_series(const fluid_params& p, double r);

/// Smallest radius in (r_min, 1) where the truncated plate stress equals B
/// (onset of the unyielded contact zone). Returns std::nullopt when the
/// plate stress stays above B everywhere in the scan — a valid outcome for
/// small ε·B.
std::optional<double> find_r0(const fluid_params& p);

} // namespace hbflow

#endif
