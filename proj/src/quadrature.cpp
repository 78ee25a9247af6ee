#include "msymm/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace msymm {

namespace {
constexpr double kPi = std::numbers::pi;

void check_grid(const KernelParts& parts, const NodalValues& v) {
    if (v.n != parts.n || v.values.size() != 2 * v.n)
        throw std::invalid_argument("nodal values do not match the kernel grid");
}
}  // namespace

double kress_weight(int n, int j, double t) {
    if (j < 0 || j >= 2 * n) throw std::invalid_argument("kress_weight: node index out of range");
    const double d = t - j * kPi / n;
    double s = std::cos(n * d) / (2.0 * n);
    for (int m = 1; m < n; ++m) s += std::cos(m * d) / m;
    return s / n;
}

double apply_SK(const KernelParts& parts, const NodalValues& v, double t) {
    check_grid(parts, v);
    const int n = parts.n;
    const double scale = convention_scale(parts.convention);
    const double h = kPi / n;
    double acc = 0.0;
    for (int j = 0; j < 2 * n; ++j)
        acc += v.values[j] * (scale * kress_weight(n, j, t) + h * smooth_kernel(parts, t, j * h));
    return acc;
}

TrigPoly apply_STK(const KernelParts& parts, const NodalValues& v) {
    check_grid(parts, v);
    const int n = parts.n;
    const double scale = convention_scale(parts.convention);
    const double h = kPi / n;
    const Eigen::VectorXd t = nodes(n);

    // Log part: sum_j v_j R_j lies in X_n because sin(n t_j) = 0.
    TrigPoly p = TrigPoly::zero(n);
    for (int m = 1; m < n; ++m) {
        double ca = 0.0, cb = 0.0;
        for (int j = 0; j < 2 * n; ++j) {
            ca += v.values[j] * std::cos(m * t[j]);
            cb += v.values[j] * std::sin(m * t[j]);
        }
        p.a(m) = scale * ca / (n * m);
        p.b(m) = scale * cb / (n * m);
    }
    double cn = 0.0;
    for (int j = 0; j < 2 * n; ++j) cn += v.values[j] * std::cos(n * t[j]);
    p.a(n) = scale * cn / (2.0 * n * n);

    Eigen::VectorXd smooth(2 * n);
    for (int k = 0; k < 2 * n; ++k) {
        double acc = 0.0;
        for (int j = 0; j < 2 * n; ++j)
            acc += v.values[j] * smooth_kernel(parts, t[k], t[j]);
        smooth[k] = h * acc;
    }
    p += interpolate(NodalValues{n, std::move(smooth)});
    return p;
}

TrigPoly apply_S0(const KernelParts& parts, const NodalValues& v) {
    TrigPoly p = apply_STK(parts, v);
    const double mean = kPi / parts.n * v.values.sum();  // = 2pi a_0 of Pi_n v
    p += mean * parts.g3;
    return p;
}

DiscreteOperator assemble(const KernelParts& parts) {
    const int n = parts.n;
    const double scale = convention_scale(parts.convention);
    const double h = kPi / n;
    const Eigen::VectorXd t = nodes(n);

    // R_j(t_k) depends only on (k - j) mod 2n.
    Eigen::VectorXd ring(2 * n);
    for (int l = 0; l < 2 * n; ++l) ring[l] = kress_weight(n, 0, t[l]);

    Eigen::VectorXd g3_nodal(2 * n);
    for (int k = 0; k < 2 * n; ++k) g3_nodal[k] = parts.g3(t[k]);

    DiscreteOperator op;
    op.n = n;
    op.convention = parts.convention;
    op.matrix.resize(2 * n, 2 * n);
    for (int k = 0; k < 2 * n; ++k)
        for (int j = 0; j < 2 * n; ++j) {
            const int l = (k - j + 2 * n) % (2 * n);
            op.matrix(k, j) =
                scale * ring[l] + h * smooth_kernel(parts, t[k], t[j]) + h * g3_nodal[k];
        }
    return op;
}

Eigen::MatrixXd coefficient_matrix(const DiscreteOperator& op) {
    const int n = op.n;
    const int dim = 2 * n;
    const Eigen::VectorXd t = nodes(n);
    const double inv_s2pi = 1.0 / std::sqrt(2.0 * kPi);
    const double inv_spi = 1.0 / std::sqrt(kPi);

    Eigen::MatrixXd eval(dim, dim);  // nodal values of the orthonormal basis
    for (int k = 0; k < dim; ++k) {
        eval(k, 0) = inv_s2pi;
        for (int j = 1; j <= n; ++j) eval(k, j) = std::cos(j * t[k]) * inv_spi;
        for (int j = 1; j < n; ++j) eval(k, n + j) = std::sin(j * t[k]) * inv_spi;
    }
    // Interpolation in the same basis: (pi/n) eval^T, top cosine halved
    // (its discrete norm over 2n nodes is doubled).
    Eigen::MatrixXd interp = (kPi / n) * eval.transpose();
    interp.row(n) *= 0.5;
    return interp * op.matrix * eval;
}

}  // namespace msymm
