#include "msymm/trig.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace msymm {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

TrigPoly::TrigPoly(int n, Eigen::VectorXd a, Eigen::VectorXd b)
    : n_(n), a_(std::move(a)), b_(std::move(b)) {
    if (n_ < 1) throw std::invalid_argument("TrigPoly: degree must be >= 1");
    if (a_.size() != n_ + 1 || b_.size() != n_ - 1)
        throw std::invalid_argument("TrigPoly: coefficient sizes must be n+1 and n-1");
}

TrigPoly TrigPoly::zero(int n) {
    return {n, Eigen::VectorXd::Zero(n + 1), Eigen::VectorXd::Zero(n - 1)};
}

TrigPoly TrigPoly::constant(int n, double value) {
    TrigPoly p = zero(n);
    p.a_[0] = value;
    return p;
}

double TrigPoly::operator()(double t) const {
    double r = a_[0];
    for (int j = 1; j <= n_; ++j) r += a_[j] * std::cos(j * t);
    for (int j = 1; j < n_; ++j) r += b_[j - 1] * std::sin(j * t);
    return r;
}

TrigPoly TrigPoly::resized(int m) const {
    TrigPoly q = zero(m);
    const int ka = std::min(m, n_);
    q.a_.head(ka + 1) = a_.head(ka + 1);
    const int kb = std::min(m - 1, n_ - 1);
    if (kb > 0) q.b_.head(kb) = b_.head(kb);
    return q;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& q) {
    if (q.n_ > n_) *this = resized(q.n_);
    a_.head(q.n_ + 1) += q.a_;
    b_.head(q.n_ - 1) += q.b_;
    return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& q) { return *this += -1.0 * q; }

TrigPoly& TrigPoly::operator*=(double c) {
    a_ *= c;
    b_ *= c;
    return *this;
}

Eigen::VectorXd nodes(int n) {
    if (n < 1) throw std::invalid_argument("nodes: n must be >= 1");
    Eigen::VectorXd t(2 * n);
    for (int k = 0; k < 2 * n; ++k) t[k] = k * kPi / n;
    return t;
}

double lagrange_basis(int n, int j, double t) {
    if (j < 0 || j >= 2 * n) throw std::invalid_argument("lagrange_basis: node index out of range");
    const double d = t - j * kPi / n;
    double s = 1.0 + std::cos(n * d);
    for (int k = 1; k < n; ++k) s += 2.0 * std::cos(k * d);
    return s / (2 * n);
}

NodalValues sample(const std::function<double(double)>& f, int n) {
    const Eigen::VectorXd t = nodes(n);
    Eigen::VectorXd v(2 * n);
    for (int k = 0; k < 2 * n; ++k) v[k] = f(t[k]);
    return {n, std::move(v)};
}

NodalValues sample(const TrigPoly& p, int n) {
    return sample([&p](double t) { return p(t); }, n);
}

TrigPoly interpolate(const NodalValues& v) {
    const int n = v.n;
    if (v.values.size() != 2 * n)
        throw std::invalid_argument("interpolate: values must have length 2n");
    const Eigen::VectorXd t = nodes(n);
    TrigPoly p = TrigPoly::zero(n);
    p.a(0) = v.values.sum() / (2 * n);
    for (int k = 1; k < n; ++k) {
        double ca = 0.0, cb = 0.0;
        for (int j = 0; j < 2 * n; ++j) {
            ca += v.values[j] * std::cos(k * t[j]);
            cb += v.values[j] * std::sin(k * t[j]);
        }
        p.a(k) = ca / n;
        p.b(k) = cb / n;
    }
    double cn = 0.0;
    for (int j = 0; j < 2 * n; ++j) cn += v.values[j] * std::cos(n * t[j]);
    p.a(n) = cn / (2 * n);
    return p;
}

TrigPoly project(const Eigen::VectorXd& samples, int n) {
    const int N = static_cast<int>(samples.size());
    if (N < 4 * n) throw std::invalid_argument("project: need at least 4n fine-grid samples");
    TrigPoly p = TrigPoly::zero(n);
    p.a(0) = samples.mean();
    for (int k = 1; k <= n; ++k) {
        double ca = 0.0, cb = 0.0;
        for (int i = 0; i < N; ++i) {
            const double t = kTwoPi * i / N;
            ca += samples[i] * std::cos(k * t);
            cb += samples[i] * std::sin(k * t);
        }
        p.a(k) = 2.0 * ca / N;
        if (k < n) p.b(k) = 2.0 * cb / N;
    }
    return p;
}

double inner_product(const TrigPoly& p, const TrigPoly& q) {
    const int m = std::max(p.degree(), q.degree());
    const TrigPoly pp = p.resized(m), qq = q.resized(m);
    double s = 2.0 * pp.a(0) * qq.a(0);
    for (int j = 1; j <= m; ++j) s += pp.a(j) * qq.a(j);
    for (int j = 1; j < m; ++j) s += pp.b(j) * qq.b(j);
    return kPi * s;
}

double l2_norm(const TrigPoly& p) { return std::sqrt(inner_product(p, p)); }

double mean_integral(const TrigPoly& p) { return kTwoPi * p.a(0); }

double sobolev_norm(const TrigPoly& p, double r) {
    double s = p.a(0) * p.a(0);
    for (int j = 1; j <= p.degree(); ++j) {
        double m2 = p.a(j) * p.a(j);
        if (j < p.degree()) m2 += p.b(j) * p.b(j);
        s += 0.5 * std::pow(1.0 + j * j, r) * m2;
    }
    return std::sqrt(s);
}

Eigen::VectorXd orthonormal_coefficients(const TrigPoly& p) {
    const int n = p.degree();
    Eigen::VectorXd c(2 * n);
    c[0] = p.a(0) * std::sqrt(kTwoPi);
    for (int j = 1; j <= n; ++j) c[j] = p.a(j) * std::sqrt(kPi);
    for (int j = 1; j < n; ++j) c[n + j] = p.b(j) * std::sqrt(kPi);
    return c;
}

TrigPoly from_orthonormal_coefficients(const Eigen::VectorXd& c) {
    if (c.size() % 2 != 0 || c.size() < 2)
        throw std::invalid_argument("from_orthonormal_coefficients: length must be even, >= 2");
    const int n = static_cast<int>(c.size()) / 2;
    TrigPoly p = TrigPoly::zero(n);
    p.a(0) = c[0] / std::sqrt(kTwoPi);
    for (int j = 1; j <= n; ++j) p.a(j) = c[j] / std::sqrt(kPi);
    for (int j = 1; j < n; ++j) p.b(j) = c[n + j] / std::sqrt(kPi);
    return p;
}

}  // namespace msymm
