#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace msymm {

// Closed analytic boundary curve given by a 2pi-periodic parameterization.
// position/velocity are closed forms; no numerical differentiation happens in
// production paths because the kernel diagonal needs |gamma'(t)| exactly.
struct BoundaryCurve {
    std::function<Eigen::Vector2d(double)> position;
    std::function<Eigen::Vector2d(double)> velocity;
    std::string label;
};

// Builtin families: circle(a), ellipse(a,b), expblob.
// Throws std::invalid_argument for unknown names or wrong parameter counts.
BoundaryCurve make_builtin(const std::string& name, const std::vector<double>& params);

// Parses "name", "name(p)" or "name(p1;p2)" (',' also accepted inside parens).
BoundaryCurve parse_curve(const std::string& spec);

// |gamma'(t)|
double speed(const BoundaryCurve& curve, double t);

// Composite trapezoidal value of the total arc length; spectrally accurate
// for analytic curves. N must be even and >= 4.
double boundary_length(const BoundaryCurve& curve, int N = 256);

}  // namespace msymm
