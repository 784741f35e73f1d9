#ifndef HBFLOW_LEADING_ORDER_HPP
#define HBFLOW_LEADING_ORDER_HPP

#include "hbflow/params.hpp"

namespace hbflow {

enum class flow_region { shear, pseudo_plug };

/// Zero-order field values at a point (r, z).
struct field_sample {
    double r;
    double z;
    double u0_val;        ///< radial velocity, order 0
    double tau_rz0;       ///< shear stress, order 0 (<= 0 for z >= 0)
    double p0_prime_val;  ///< radial pressure gradient, order 0
    flow_region region;   ///< pseudo_plug iff z < z0(r)
};

/// Pseudo-plug (core) velocity u0(r) = B^m (1−z0)^{1+m} / [z0^m (1+m)].
/// Zero at r = 0.
double plug_velocity(const fluid_params& p, double r);

/// Analytic du0/dr by the chain rule through z0(r):
///   du0/dr = [−B^m (1−z0)^m z0^{−m−1} (z0+m)/(m+1)] · z0'(r).
/// Positive on (0,1] (outward flow accelerates with radius); throws
/// std::domain_error at r = 0 where z0' is singular.
double plug_velocity_prime(const fluid_params& p, double r);

/// Zero-order velocity profile:
///   u0(r)                                          for z in [0, z0]
///   (B/z0)^m/(1+m) · [(1−z0)^{1+m} − (z−z0)^{1+m}] for z in (z0, 1].
/// Continuous at z0, no-slip at z = 1. Throws std::domain_error for z
/// outside [0,1].
double u_zero(const fluid_params& p, double r, double z);

/// Zero-order stress pair at (r, z).
struct leading_stress_t {
    double tau_rz0;  ///< −Bz/z0
    double p0_prime; ///< −B/z0
};
leading_stress_t leading_stress(const fluid_params& p, double r, double z);

/// Full zero-order sample (velocity + stress + region tag) at (r, z).
field_sample sample_leading(const fluid_params& p, double r, double z);

/// Zero-order pressure evaluated by quadrature in the z0 variable,
///   p0(r) = 2B^{m+1} ∫_{z0(1)}^{z0(r)} (1−s)^m (2s²+2ms+m+m²)
///           / [s^{m+2}(m+1)(m+2)] ds + ε·p_R,
/// carrying the edge constant so that p0(1) = ε·p_R.
double pressure_zero(const fluid_params& p, double r);

/// Cross-check form of the same pressure: direct radial quadrature
/// −∫_r^1 p0'(ρ) dρ + ε·p_R = ∫_r^1 B/z0(ρ) dρ + ε·p_R. The two forms must
/// agree to quadrature accuracy; kept public for the equivalence tests.
double pressure_zero_rform(const fluid_params& p, double r);

} // namespace hbflow

#endif
