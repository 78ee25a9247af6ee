#pragma once

#include <functional>

#include <Eigen/Core>

namespace msymm {

// Real trigonometric polynomial in the 2n-dimensional space
//   X_n = span{1, cos t, ..., cos nt, sin t, ..., sin (n-1)t},
// stored as cosine coefficients a_0..a_n and sine coefficients b_1..b_{n-1}.
// The top sine frequency is absent by construction: it vanishes at the
// equispaced nodes t_j = j*pi/n, so X_n is exactly the nodal space.
class TrigPoly {
  public:
    TrigPoly() : n_(1), a_(Eigen::VectorXd::Zero(2)), b_(Eigen::VectorXd::Zero(0)) {}
    TrigPoly(int n, Eigen::VectorXd a, Eigen::VectorXd b);

    static TrigPoly zero(int n);
    static TrigPoly constant(int n, double value);

    int degree() const { return n_; }
    const Eigen::VectorXd& a() const { return a_; }
    const Eigen::VectorXd& b() const { return b_; }
    double& a(int j) { return a_[j]; }
    double& b(int j) { return b_[j - 1]; }
    double a(int j) const { return a_[j]; }
    double b(int j) const { return b_[j - 1]; }

    double operator()(double t) const;

    // L2-orthogonal projection onto X_m for m < degree, zero-padding for
    // m > degree (frequencies above m are dropped, including sin mt).
    TrigPoly resized(int m) const;

    TrigPoly& operator+=(const TrigPoly& q);
    TrigPoly& operator-=(const TrigPoly& q);
    TrigPoly& operator*=(double c);
    friend TrigPoly operator+(TrigPoly p, const TrigPoly& q) { return p += q; }
    friend TrigPoly operator-(TrigPoly p, const TrigPoly& q) { return p -= q; }
    friend TrigPoly operator*(double c, TrigPoly p) { return p *= c; }

  private:
    int n_;
    Eigen::VectorXd a_;  // size n_+1
    Eigen::VectorXd b_;  // size n_-1
};

// Samples f(t_j) on the grid t_j = j*pi/n, j = 0..2n-1.
struct NodalValues {
    int n;
    Eigen::VectorXd values;  // size 2n
};

// t_k = k*pi/n, k = 0..2n-1.
Eigen::VectorXd nodes(int n);

// L_j(t) = (1/2n)(1 + 2 sum_{k<n} cos k(t-t_j) + cos n(t-t_j));
// L_j(t_k) = delta_{jk}.
double lagrange_basis(int n, int j, double t);

NodalValues sample(const std::function<double(double)>& f, int n);
NodalValues sample(const TrigPoly& p, int n);

// Trigonometric interpolation Pi_n: the unique element of X_n matching the
// nodal values; a projection on inputs already in X_n.
TrigPoly interpolate(const NodalValues& v);

// Orthogonal L2 projection P_n from samples on a fine equispaced grid
// t_i = 2*pi*i/N (N = samples.size() >= 4n): Fourier coefficients by
// trapezoid, frequencies above n dropped (including sin nt).
TrigPoly project(const Eigen::VectorXd& samples, int n);

// Exact L2(0,2pi) pairings via coefficients: (1,1) = 2pi, (cos jt,cos jt) =
// (sin jt,sin jt) = pi.
double inner_product(const TrigPoly& p, const TrigPoly& q);
double l2_norm(const TrigPoly& p);
double mean_integral(const TrigPoly& p);  // = 2*pi*a_0

// Diagnostic periodic Sobolev norm: ||p||^2 = sum (1+j^2)^r |c_j|^2 over the
// complex coefficients of p = sum c_j e^{ijt}; sobolev_norm(p,0) =
// l2_norm(p)/sqrt(2pi).
double sobolev_norm(const TrigPoly& p, double r);

// Coefficients of p in the L2-orthonormal basis
// {1/sqrt(2pi), cos jt/sqrt(pi), sin jt/sqrt(pi)}, ordered
// [const, cos 1..n, sin 1..n-1]; Euclidean norms equal L2 norms.
Eigen::VectorXd orthonormal_coefficients(const TrigPoly& p);
TrigPoly from_orthonormal_coefficients(const Eigen::VectorXd& c);

}  // namespace msymm
