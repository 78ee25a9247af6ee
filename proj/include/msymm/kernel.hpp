#pragma once

#include "msymm/geometry.hpp"
#include "msymm/trig.hpp"

namespace msymm {

// Two self-consistent normalizations of the modified single-layer operator.
// classic:  S0 f = -(1/2pi) int (f - Mf) ln|x-y| ds + (1/|bd|) int f ds
// doubled:  S0 f = -(1/pi)  int (f - Mf) ln|x-y| ds + (2/|bd|) int f ds
// Every kernel piece of doubled is exactly twice the classic one; densities
// solved under classic are twice the doubled ones and all potentials agree.
enum class Convention { classic, doubled };

// 1.0 for doubled, 0.5 for classic: the global factor relative to doubled.
double convention_scale(Convention c);

// Multiplier turning the mean value M(psi) into the far-field constant u_inf.
double farfield_factor(Convention c);

Convention parse_convention(const std::string& name);
std::string to_string(Convention c);

// Precomputed kernel split for one (curve, convention, degree):
// the smooth remainder is evaluated on demand from the curve; g3 holds the
// s-independent kernel term as a degree-n polynomial.
struct KernelParts {
    BoundaryCurve curve;
    Convention convention = Convention::doubled;
    int n = 0;                   // reference grid half-count
    double length = 0.0;         // |boundary|, 256-node trapezoid
    Eigen::VectorXd speeds;      // |gamma'(t_j)| at the 2n nodes
    TrigPoly g3;                 // degree-n s-independent kernel term
};

// Smooth remainder of the log kernel under parts.convention
// (doubled: k(t,s) = -(1/2pi) ln(|g(t)-g(s)|^2 / (4 sin^2((t-s)/2))),
// diagonal k(t,t) = -(1/pi) ln|g'(t)|; classic halves both).
// Arguments within 1e-6 (mod 2pi) route through the analytic diagonal at the
// midpoint to avoid cancellation.
double smooth_kernel(const KernelParts& parts, double t, double s);

// Raw singular factor ln(4 sin^2((t-s)/2)); consumed only through quadrature
// weights. Throws std::domain_error at coincident arguments.
double g1_log_kernel(double t, double s);

// s-independent kernel term as a degree-n polynomial:
// scale * ( -(1/|bd|) S_K(|gamma'|) + 2/|bd| ) with S_K in the doubled
// normalization; implemented through the discrete single-layer application.
TrigPoly build_g3(const BoundaryCurve& curve, Convention convention, int n);

// Full parts bundle at degree n (builds g3 internally).
KernelParts make_kernel_parts(const BoundaryCurve& curve, Convention convention, int n);

// Mean value M(psi) = (1/|bd|) int psi ds = 2*pi*a_0 / |bd|; psi already
// carries the surface measure (densities are speed-weighted).
double mean_value(const KernelParts& parts, const TrigPoly& psi);

}  // namespace msymm
