#include "msymm/potential.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace msymm {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr int kPolygonVertices = 256;
}  // namespace

ExteriorField::ExteriorField(const BoundaryCurve& curve, Convention convention,
                             TrigPoly density, int quadrature_points)
    : curve_(curve), convention_(convention), density_(std::move(density)) {
    n_quad_ = quadrature_points > 0 ? quadrature_points
                                    : std::max(4 * density_.degree(), 256);
    if (n_quad_ < 4 * density_.degree())
        throw std::invalid_argument("ExteriorField: need at least 4*degree quadrature points");
    length_ = boundary_length(curve_);
    mean_value_ = mean_integral(density_) / length_;

    points_.reserve(n_quad_);
    moments_.resize(n_quad_);
    for (int i = 0; i < n_quad_; ++i) {
        const double t = 2.0 * kPi * i / n_quad_;
        points_.push_back(curve_.position(t));
        moments_[i] = density_(t) - mean_value_ * speed(curve_, t);
    }
    polygon_.reserve(kPolygonVertices);
    for (int i = 0; i < kPolygonVertices; ++i)
        polygon_.push_back(curve_.position(2.0 * kPi * i / kPolygonVertices));
}

bool ExteriorField::is_exterior(const Eigen::Vector2d& x) const {
    double angle = 0.0;
    for (int i = 0; i < kPolygonVertices; ++i) {
        const Eigen::Vector2d u = polygon_[i] - x;
        const Eigen::Vector2d v = polygon_[(i + 1) % kPolygonVertices] - x;
        angle += std::atan2(u.x() * v.y() - u.y() * v.x(), u.dot(v));
    }
    return std::abs(angle) < kPi;  // winding number 0 vs +-1
}

double ExteriorField::operator()(const Eigen::Vector2d& x) const {
    if (!is_exterior(x)) {
        std::ostringstream os;
        os << "field evaluation at non-exterior point (" << x.x() << ", " << x.y() << ")";
        throw std::domain_error(os.str());
    }
    // The density moment integrates to zero, so any constant may be
    // subtracted from the log kernel; anchoring at gamma(0) removes the
    // ln|x| amplification of rounding at large |x|.
    const double anchor = (x - points_[0]).norm();
    double acc = 0.0;
    for (int i = 0; i < n_quad_; ++i)
        acc += moments_[i] * std::log((x - points_[i]).norm() / anchor);
    const double scale = convention_scale(convention_);
    return -(scale / kPi) * (2.0 * kPi / n_quad_) * acc + far_field();
}

double ExteriorField::far_field() const {
    return farfield_factor(convention_) * mean_value_;
}

std::vector<Eigen::Vector2d> standard_error_grid() {
    std::vector<Eigen::Vector2d> grid;
    grid.reserve(400);
    for (int i = 1; i <= 20; ++i)
        for (int j = 1; j <= 20; ++j) grid.emplace_back(0.1 + i, 1.1 + j);
    return grid;
}

double err_grid(const ExteriorField& reference, const ExteriorField& approx,
                const std::vector<Eigen::Vector2d>& grid) {
    for (const auto& x : grid)
        if (!reference.is_exterior(x) || !approx.is_exterior(x)) {
            std::ostringstream os;
            os << "error grid point (" << x.x() << ", " << x.y() << ") is not exterior";
            throw std::domain_error(os.str());
        }
    double worst = 0.0;
    for (const auto& x : grid) worst = std::max(worst, std::abs(approx(x) - reference(x)));
    return worst;
}

}  // namespace msymm
