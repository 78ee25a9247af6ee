#include "msymm/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "msymm/quadrature.hpp"

namespace msymm {

namespace {
constexpr double kPi = std::numbers::pi;

double wrap_to_pi(double d) {
    d = std::fmod(d, 2.0 * kPi);
    if (d > kPi) d -= 2.0 * kPi;
    if (d < -kPi) d += 2.0 * kPi;
    return d;
}
}  // namespace

double convention_scale(Convention c) { return c == Convention::doubled ? 1.0 : 0.5; }

double farfield_factor(Convention c) { return c == Convention::doubled ? 2.0 : 1.0; }

Convention parse_convention(const std::string& name) {
    if (name == "classic") return Convention::classic;
    if (name == "doubled") return Convention::doubled;
    throw std::invalid_argument("unknown convention '" + name + "'; known: classic, doubled");
}

std::string to_string(Convention c) { return c == Convention::doubled ? "doubled" : "classic"; }

double smooth_kernel(const KernelParts& parts, double t, double s) {
    const double scale = convention_scale(parts.convention);
    const double d = wrap_to_pi(t - s);
    if (std::abs(d) < 1e-6) {
        const double mid = 0.5 * (t + s);
        return scale * (-std::log(speed(parts.curve, mid)) / kPi);
    }
    const double dist2 = (parts.curve.position(t) - parts.curve.position(s)).squaredNorm();
    const double sin_half = std::sin(0.5 * d);
    return scale * (-std::log(dist2 / (4.0 * sin_half * sin_half)) / (2.0 * kPi));
}

double g1_log_kernel(double t, double s) {
    const double sin_half = std::sin(0.5 * wrap_to_pi(t - s));
    if (sin_half == 0.0) throw std::domain_error("g1_log_kernel: singular at t = s");
    return std::log(4.0 * sin_half * sin_half);
}

TrigPoly build_g3(const BoundaryCurve& curve, Convention convention, int n) {
    KernelParts base;
    base.curve = curve;
    base.convention = convention;
    base.n = n;
    base.length = boundary_length(curve);
    const Eigen::VectorXd t = nodes(n);
    base.speeds.resize(2 * n);
    for (int j = 0; j < 2 * n; ++j) base.speeds[j] = speed(curve, t[j]);
    base.g3 = TrigPoly::zero(n);

    // S_K of the speed function never touches g3, so the base bundle is
    // complete for this application.
    TrigPoly g3 = apply_STK(base, NodalValues{n, base.speeds});
    g3 *= -1.0 / base.length;
    g3.a(0) += 2.0 * convention_scale(convention) / base.length;
    return g3;
}

KernelParts make_kernel_parts(const BoundaryCurve& curve, Convention convention, int n) {
    if (n < 1) throw std::invalid_argument("make_kernel_parts: degree must be >= 1");
    KernelParts parts;
    parts.curve = curve;
    parts.convention = convention;
    parts.n = n;
    parts.length = boundary_length(curve);
    const Eigen::VectorXd t = nodes(n);
    parts.speeds.resize(2 * n);
    for (int j = 0; j < 2 * n; ++j) parts.speeds[j] = speed(curve, t[j]);
    parts.g3 = build_g3(curve, convention, n);
    return parts;
}

double mean_value(const KernelParts& parts, const TrigPoly& psi) {
    return mean_integral(psi) / parts.length;
}

}  // namespace msymm
