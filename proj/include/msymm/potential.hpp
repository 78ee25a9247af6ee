#pragma once

#include <vector>

#include "msymm/kernel.hpp"

namespace msymm {

// Exterior harmonic field generated by a solved boundary density through the
// modified single-layer representation. Quadrature samples and the
// zero-moment weights are precomputed at construction.
class ExteriorField {
  public:
    // quadrature_points = 0 selects max(4*degree, 256). The evaluation is
    // documented for points at distance >= 0.1 from the boundary; no
    // near-singular quadrature is attempted.
    ExteriorField(const BoundaryCurve& curve, Convention convention, TrigPoly density,
                  int quadrature_points = 0);

    // Field value; throws std::domain_error for points on or inside the
    // boundary (winding-number test against a 256-vertex polygon).
    double operator()(const Eigen::Vector2d& x) const;

    // Constant limit at infinity: farfield_factor * mean value of the
    // density. The log moments cancel exactly, so there is no 1/|x| term of
    // the log strength left.
    double far_field() const;

    bool is_exterior(const Eigen::Vector2d& x) const;

    const TrigPoly& density() const { return density_; }
    double mean_value() const { return mean_value_; }

  private:
    BoundaryCurve curve_;
    Convention convention_;
    TrigPoly density_;
    double length_;
    double mean_value_;
    int n_quad_;
    std::vector<Eigen::Vector2d> points_;   // gamma at quadrature nodes
    Eigen::VectorXd moments_;               // psi - M*|gamma'| at the nodes
    std::vector<Eigen::Vector2d> polygon_;  // winding-number test vertices
};

// The 20 x 20 comparison grid x_{i,j} = (0.1 + i, 1.1 + j), i,j = 1..20.
std::vector<Eigen::Vector2d> standard_error_grid();

// max_{grid} |approx - reference|; throws std::domain_error naming the first
// interior grid point if any.
double err_grid(const ExteriorField& reference, const ExteriorField& approx,
                const std::vector<Eigen::Vector2d>& grid = standard_error_grid());

}  // namespace msymm
