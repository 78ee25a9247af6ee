#include "msymm/solvers.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

namespace msymm {

namespace {
constexpr double kPi = std::numbers::pi;

double condition_estimate(const Eigen::MatrixXd& m) {
    const auto sv = Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues();
    const double smin = sv[sv.size() - 1];
    return smin > 0.0 ? sv[0] / smin : std::numeric_limits<double>::infinity();
}

// Direct dense solve with a loud failure on numerically singular systems.
Eigen::VectorXd lu_solve(const Eigen::MatrixXd& m, const Eigen::VectorXd& rhs,
                         const std::string& context) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
    const Eigen::VectorXd diag = lu.matrixLU().diagonal().cwiseAbs();
    if (diag.minCoeff() < 1e-14 * diag.maxCoeff())
        throw SolverFailure("numerically singular system in " + context,
                            condition_estimate(m));
    return lu.solve(rhs);
}
}  // namespace

MethodKind parse_method(const std::string& name) {
    if (name == "LS") return MethodKind::LS;
    if (name == "DLS") return MethodKind::DLS;
    if (name == "BG") return MethodKind::BG;
    if (name == "GC") return MethodKind::GC;
    throw std::invalid_argument("unknown method '" + name + "'; known: LS, DLS, BG, GC");
}

std::string to_string(MethodKind m) {
    switch (m) {
        case MethodKind::LS: return "LS";
        case MethodKind::DLS: return "DLS";
        case MethodKind::BG: return "BG";
        case MethodKind::GC: return "GC";
    }
    return "?";
}

TrigPoly manufacture_rhs(const BoundaryCurve& curve, Convention convention,
                         const std::function<double(double)>& density, int N) {
    const KernelParts parts = make_kernel_parts(curve, convention, N);
    return apply_S0(parts, sample(density, N));
}

Problem make_problem(const BoundaryCurve& curve, Convention convention,
                     const std::function<double(double)>& density, double noise_level,
                     int reference_degree) {
    if (noise_level < 0) throw std::invalid_argument("make_problem: noise level must be >= 0");
    if (reference_degree < 0)
        throw std::invalid_argument("make_problem: reference degree must be >= 0");
    Problem p;
    p.curve = curve;
    p.convention = convention;
    p.exact_density = density;
    p.noise_level = noise_level;
    p.reference_degree = reference_degree;
    p.rhs = manufacture_rhs(curve, convention, density,
                            reference_degree > 0 ? reference_degree : 32);
    return p;
}

Problem make_problem_from_rhs(const BoundaryCurve& curve, Convention convention,
                              const TrigPoly& rhs, double noise_level) {
    if (noise_level < 0)
        throw std::invalid_argument("make_problem_from_rhs: noise level must be >= 0");
    Problem p;
    p.curve = curve;
    p.convention = convention;
    p.rhs = rhs;
    p.noise_level = noise_level;
    p.reference_degree = rhs.degree();
    return p;
}

TrigPoly make_noisy_rhs(const TrigPoly& g, double delta) {
    if (delta < 0) throw std::invalid_argument("make_noisy_rhs: delta must be >= 0");
    if (delta == 0) return g;
    TrigPoly noisy = g.degree() >= 7 ? g : g.resized(7);
    noisy.b(6) += delta / std::sqrt(kPi);
    return noisy;
}

double error_metric(const TrigPoly& psi_n, const std::function<double(double)>& truth) {
    const int M = 8 * psi_n.degree();
    double acc = 0.0;
    for (int i = 0; i < M; ++i) {
        const double t = 2.0 * kPi * i / M;
        const double d = psi_n(t) - truth(t);
        acc += d * d;
    }
    return std::sqrt(2.0 * kPi / M * acc);
}

SolveReport solve(const Problem& problem, MethodKind method, int n) {
    if (n < 2) throw std::invalid_argument("solve: degree must be >= 2");
    const auto start = std::chrono::steady_clock::now();

    TrigPoly g = problem.rhs;
    if (problem.reference_degree == 0) {
        if (!problem.exact_density)
            throw std::invalid_argument("solve: auto reference degree needs an exact density");
        const int N = std::max(4 * n, 32);
        if (N != g.degree())
            g = manufacture_rhs(problem.curve, problem.convention, problem.exact_density, N);
    }
    const TrigPoly g_delta = make_noisy_rhs(g, problem.noise_level);

    const KernelParts parts = make_kernel_parts(problem.curve, problem.convention, n);
    const DiscreteOperator op = assemble(parts);

    SolveReport report;
    report.method = method;
    report.n = n;

    if (method == MethodKind::GC) {
        const Eigen::VectorXd t = nodes(n);
        Eigen::VectorXd rhs_nodal(2 * n);
        for (int k = 0; k < 2 * n; ++k) rhs_nodal[k] = g_delta(t[k]);
        const Eigen::VectorXd x = lu_solve(op.matrix, rhs_nodal, "GC collocation system");
        report.density = interpolate(NodalValues{n, x});
        report.condition = condition_estimate(op.matrix);
    } else {
        const Eigen::MatrixXd ahat = coefficient_matrix(op);
        const Eigen::VectorXd ghat = orthonormal_coefficients(g_delta.resized(n));
        Eigen::VectorXd x;
        Eigen::MatrixXd system;
        switch (method) {
            case MethodKind::LS:
                system = ahat.transpose() * ahat;
                x = lu_solve(system, ahat.transpose() * ghat, "LS normal equations");
                break;
            case MethodKind::BG:
                system = ahat;
                x = lu_solve(system, ghat, "BG Galerkin system");
                break;
            case MethodKind::DLS: {
                system = ahat * ahat.transpose();
                const Eigen::VectorXd z = lu_solve(system, ghat, "DLS dual system");
                x = ahat.transpose() * z;
                break;
            }
            default: break;
        }
        report.density = from_orthonormal_coefficients(x);
        report.condition = condition_estimate(system);
    }

    report.residual = l2_norm(apply_S0(parts, sample(report.density, n)) - g_delta);
    if (problem.exact_density) report.r = error_metric(report.density, problem.exact_density);
    report.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace msymm
