#include "msymm/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace msymm {

namespace {

std::string format_params(const std::string& name, const std::vector<double>& params) {
    if (params.empty()) return name;
    std::ostringstream os;
    os << name << '(';
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) os << ';';
        os << params[i];
    }
    os << ')';
    return os.str();
}

}  // namespace

BoundaryCurve make_builtin(const std::string& name, const std::vector<double>& params) {
    auto require = [&](std::size_t count) {
        if (params.size() != count) {
            std::ostringstream os;
            os << "curve '" << name << "' expects " << count << " parameter(s), got "
               << params.size();
            throw std::invalid_argument(os.str());
        }
    };
    if (name == "circle") {
        require(1);
        const double a = params[0];
        if (a <= 0) throw std::invalid_argument("circle radius must be positive");
        return {
            [a](double t) { return Eigen::Vector2d(a * std::cos(t), a * std::sin(t)); },
            [a](double t) { return Eigen::Vector2d(-a * std::sin(t), a * std::cos(t)); },
            format_params(name, params)};
    }
    if (name == "ellipse") {
        require(2);
        const double a = params[0], b = params[1];
        if (a <= 0 || b <= 0) throw std::invalid_argument("ellipse semi-axes must be positive");
        return {
            [a, b](double t) { return Eigen::Vector2d(a * std::cos(t), b * std::sin(t)); },
            [a, b](double t) { return Eigen::Vector2d(-a * std::sin(t), b * std::cos(t)); },
            format_params(name, params)};
    }
    if (name == "expblob") {
        require(0);
        return {[](double t) {
                    return Eigen::Vector2d(std::exp(-1.0 + std::cos(t)),
                                           2.0 * std::exp(-1.0 + std::sin(t)));
                },
                [](double t) {
                    return Eigen::Vector2d(-std::sin(t) * std::exp(-1.0 + std::cos(t)),
                                           2.0 * std::cos(t) * std::exp(-1.0 + std::sin(t)));
                },
                "expblob"};
    }
    throw std::invalid_argument("unknown curve '" + name +
                                "'; known: circle(a), ellipse(a;b), expblob");
}

BoundaryCurve parse_curve(const std::string& spec) {
    const auto open = spec.find('(');
    if (open == std::string::npos) return make_builtin(spec, {});
    if (spec.back() != ')') throw std::invalid_argument("malformed curve spec '" + spec + "'");
    const std::string name = spec.substr(0, open);
    std::string inner = spec.substr(open + 1, spec.size() - open - 2);
    for (char& c : inner)
        if (c == ',') c = ';';
    std::vector<double> params;
    std::istringstream is(inner);
    std::string item;
    while (std::getline(is, item, ';')) {
        std::size_t used = 0;
        double value;
        try {
            value = std::stod(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad curve parameter '" + item + "' in '" + spec + "'");
        }
        if (used != item.size())
            throw std::invalid_argument("bad curve parameter '" + item + "' in '" + spec + "'");
        params.push_back(value);
    }
    return make_builtin(name, params);
}

double speed(const BoundaryCurve& curve, double t) { return curve.velocity(t).norm(); }

double boundary_length(const BoundaryCurve& curve, int N) {
    if (N < 4 || N % 2 != 0) throw std::invalid_argument("boundary_length: N must be even, >= 4");
    const double h = 2.0 * std::numbers::pi / N;
    double sum = 0.0;
    for (int i = 0; i < N; ++i) sum += speed(curve, i * h);
    return h * sum;
}

}  // namespace msymm
