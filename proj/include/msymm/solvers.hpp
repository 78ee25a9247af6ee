#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "msymm/kernel.hpp"
#include "msymm/quadrature.hpp"

namespace msymm {

enum class MethodKind { LS, DLS, BG, GC };

MethodKind parse_method(const std::string& name);
std::string to_string(MethodKind m);

// Thrown when a discrete system is numerically singular (smallest pivot
// below 1e-14 of the largest); carries the condition estimate of the
// offending matrix. No regularization is applied anywhere.
class SolverFailure : public std::runtime_error {
  public:
    SolverFailure(const std::string& what, double condition)
        : std::runtime_error(what), condition_(condition) {}
    double condition_estimate() const { return condition_; }

  private:
    double condition_;
};

// One instance of the integral equation S0 psi = g with optional synthetic
// truth. When reference_degree == 0 the right-hand side is re-manufactured
// per solve at degree max(4n, 32) (avoids the inverse crime); a positive
// value freezes the forward map at that degree.
struct Problem {
    BoundaryCurve curve;
    Convention convention = Convention::doubled;
    std::function<double(double)> exact_density;  // may be empty
    TrigPoly rhs;                                 // clean data g
    double noise_level = 0.0;
    int reference_degree = 0;                     // 0 = auto per solve
};

struct SolveReport {
    MethodKind method = MethodKind::LS;
    int n = 0;
    TrigPoly density;
    double residual = 0.0;   // ||S0^(n) psi_n - g^delta||_L2
    double condition = 0.0;  // of the factorized system
    double elapsed_s = 0.0;
    std::optional<double> r;  // ||psi_n - psi_truth||_L2 when truth known
};

// g at degree N manufactured from a density by the discrete forward map.
TrigPoly manufacture_rhs(const BoundaryCurve& curve, Convention convention,
                         const std::function<double(double)>& density, int N);

// Problem with synthetic truth; reference_degree 0 = auto (anti inverse
// crime), positive = frozen forward-map degree.
Problem make_problem(const BoundaryCurve& curve, Convention convention,
                     const std::function<double(double)>& density, double noise_level,
                     int reference_degree = 0);

// Problem from explicit boundary data (no truth attached).
Problem make_problem_from_rhs(const BoundaryCurve& curve, Convention convention,
                              const TrigPoly& rhs, double noise_level = 0.0);

// g + delta * sin(6t)/sqrt(pi); unit-norm perturbation so that
// ||g^delta - g||_L2 = delta. Pads g to degree >= 7 when needed.
TrigPoly make_noisy_rhs(const TrigPoly& g, double delta);

// ||psi_n - truth||_L2 by trapezoid on 8*degree points.
double error_metric(const TrigPoly& psi_n, const std::function<double(double)>& truth);

// Solves with the requested projection method at degree n >= 2.
//   LS : normal equations for min ||S0 psi - g^delta|| over X_n
//   DLS: psi = S0* z with (S0* z, S0* phi) = (g^delta, phi) for phi in X_n
//   BG : (S0 psi, phi) = (g^delta, phi) for phi in X_n
//   GC : (S0 psi)(t_k) = g^delta(t_k), square nodal system
// L2 pairings are exact coefficient inner products; the discrete adjoint is
// the transpose in the orthonormal coefficient basis.
SolveReport solve(const Problem& problem, MethodKind method, int n);

}  // namespace msymm
