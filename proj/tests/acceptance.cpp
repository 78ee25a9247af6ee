// Acceptance suite: ten structural and analytic checks covering the discrete
// operator, the quadrature weights, all four solvers, both conventions, and
// the exterior field. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fail.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "msymm/experiment.hpp"
#include "msymm/potential.hpp"
#include "msymm/quadrature.hpp"
#include "msymm/solvers.hpp"
#include "oracles.hpp"

using msymm::BoundaryCurve;
using msymm::Convention;
using msymm::ExteriorField;
using msymm::MethodKind;
using msymm::Problem;
using msymm::TrigPoly;

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kA = std::exp(-0.5);

int g_failures = 0;

class Timer {
  public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

void report(int criterion, bool ok, const std::string& detail) {
    if (!ok) ++g_failures;
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
    std::fflush(stdout);
}

double sup_norm(const TrigPoly& p) {
    double m = 0.0;
    const int samples = std::max(64, 8 * p.degree());
    for (int i = 0; i < samples; ++i) m = std::max(m, std::abs(p(2 * kPi * i / samples)));
    return m;
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

double exp_sin(double t) { return std::exp(std::sin(t)); }

// 1. The discrete operator on the circle is diagonal on the Fourier basis
// with eigenvalues 1/|k|, constants mapping to farfield 2/a.
void criterion_1() {
    const Timer timer;
    const BoundaryCurve circle = msymm::make_builtin("circle", {kA});
    const int n = 16;
    const msymm::KernelParts parts = msymm::make_kernel_parts(circle, Convention::doubled, n);

    double worst = 0.0;
    for (int k = 1; k <= 15; ++k) {
        for (const bool sine : {false, true}) {
            TrigPoly p = TrigPoly::zero(n);
            if (sine)
                p.b(k) = 1.0;
            else
                p.a(k) = 1.0;
            const TrigPoly image = msymm::apply_S0(parts, msymm::sample(p, n));
            worst = std::max(worst, sup_norm(image - (1.0 / k) * p));
        }
    }
    const TrigPoly ones = msymm::apply_S0(parts, msymm::sample(TrigPoly::constant(n, 1.0), n));
    const double const_dev = sup_norm(ones - TrigPoly::constant(n, 2.0 * std::exp(0.5)));
    const double elapsed = timer.seconds();

    report(1, worst <= 1e-10 && const_dev <= 1e-10 && elapsed < 1.0,
           "circle eigenvalue oracle, max deviation " + fmt(std::max(worst, const_dev)) + " (" +
               fmt(elapsed) + " s)");
}

// 2. Kress weights: zero row sum at random arguments; the n = 2 self weight
// matches adaptive integration of the Lagrange basis against the log kernel.
void criterion_2() {
    std::mt19937 rng(20260815);
    std::uniform_real_distribution<double> uniform(0.0, 2 * kPi);
    double worst_sum = 0.0;
    for (const int n : {2, 8, 16}) {
        for (int trial = 0; trial < 32; ++trial) {
            const double t = uniform(rng);
            double sum = 0.0;
            for (int j = 0; j < 2 * n; ++j) sum += msymm::kress_weight(n, j, t);
            worst_sum = std::max(worst_sum, std::abs(sum));
        }
    }

    const double t0 = 0.0;
    const double weight = msymm::kress_weight(2, 0, t0);
    const double integral = oracles::kress_weight_by_integral(
        2, 0, t0, [](double s) { return msymm::lagrange_basis(2, 0, s); });
    const double dev = std::abs(weight - integral);

    report(2, worst_sum <= 1e-12 && dev <= 1e-8,
           "row sums " + fmt(worst_sum) + ", R_0(t_0) vs adaptive integral " + fmt(dev));
}

// 3. Noise amplification: r/delta sits in [5.9, 6.1] for every method and
// noise level, and is constant in delta to 2%.
void criterion_3() {
    const Timer timer;
    const BoundaryCurve ellipse = msymm::make_builtin("ellipse", {1.0, 2.0});
    bool ok = true;
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const MethodKind m : {MethodKind::LS, MethodKind::BG, MethodKind::GC}) {
        double first_ratio = 0.0;
        for (const double delta : {1e-3, 1e-2, 1e-1}) {
            const Problem problem = msymm::make_problem(ellipse, Convention::doubled, exp_sin, delta);
            const double r = *msymm::solve(problem, m, 12).r;
            const double ratio = r / delta;
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
            ok = ok && ratio >= 5.9 && ratio <= 6.1;
            if (first_ratio == 0.0)
                first_ratio = ratio;
            else
                ok = ok && std::abs(ratio - first_ratio) <= 0.02 * first_ratio;
        }
    }
    const double elapsed = timer.seconds();
    ok = ok && elapsed < 10.0;
    report(3, ok, "noise amplification r/delta in [" + fmt(lo) + ", " + fmt(hi) + "] (" +
                      fmt(elapsed) + " s)");
}

// 4. Geometric convergence of r on both curves for LS, BG, GC.
void criterion_4() {
    bool ok = true;
    double worst_ratio = 0.0;
    for (const char* spec : {"ellipse(1;2)", "expblob"}) {
        const BoundaryCurve curve = msymm::parse_curve(spec);
        const Problem problem = msymm::make_problem(curve, Convention::doubled, exp_sin, 0.0, 12);
        for (const MethodKind m : {MethodKind::LS, MethodKind::BG, MethodKind::GC}) {
            double r4 = 0.0, last = std::numeric_limits<double>::infinity();
            for (const int n : {4, 6, 8, 10, 12}) {
                const double r = *msymm::solve(problem, m, n).r;
                ok = ok && r <= last * (1.0 + 1e-12);
                last = r;
                if (n == 4) r4 = r;
            }
            ok = ok && last <= 1e-3 * r4;
            worst_ratio = std::max(worst_ratio, last / r4);
        }
    }
    report(4, ok, "r(12)/r(4) worst case " + fmt(worst_ratio) + ", monotone over n");
}

// 5. LS, BG, GC land on the same density at n = 10, delta = 0.
void criterion_5() {
    double worst = 0.0;
    for (const char* spec : {"ellipse(1;2)", "expblob"}) {
        const BoundaryCurve curve = msymm::parse_curve(spec);
        const Problem problem = msymm::make_problem(curve, Convention::doubled, exp_sin, 0.0, 10);
        TrigPoly densities[3];
        int i = 0;
        for (const MethodKind m : {MethodKind::LS, MethodKind::BG, MethodKind::GC})
            densities[i++] = msymm::solve(problem, m, 10).density;
        for (int p = 0; p < 3; ++p)
            for (int q = p + 1; q < 3; ++q)
                worst = std::max(worst, msymm::l2_norm(densities[p] - densities[q]));
    }
    report(5, worst <= 1e-4, "pairwise method distance at n = 10: " + fmt(worst));
}

// 6. The same boundary data solved under both conventions: densities differ
// by exactly the factor 2, potentials agree.
void criterion_6() {
    const BoundaryCurve ellipse = msymm::make_builtin("ellipse", {1.0, 2.0});
    const TrigPoly g = msymm::manufacture_rhs(ellipse, Convention::doubled, exp_sin, 32);

    const Problem doubled = msymm::make_problem_from_rhs(ellipse, Convention::doubled, g);
    const Problem classic = msymm::make_problem_from_rhs(ellipse, Convention::classic, g);
    const TrigPoly psi_d = msymm::solve(doubled, MethodKind::LS, 10).density;
    const TrigPoly psi_c = msymm::solve(classic, MethodKind::LS, 10).density;

    const double density_dev =
        msymm::l2_norm(psi_c - 2.0 * psi_d) / msymm::l2_norm(psi_c);

    const ExteriorField u_d(ellipse, Convention::doubled, psi_d);
    const ExteriorField u_c(ellipse, Convention::classic, psi_c);
    const Eigen::Vector2d points[8] = {{3.0, 3.0},  {-2.0, 1.0},  {5.0, -4.0},  {0.0, 3.0},
                                       {-3.0, 0.0}, {2.5, -2.5}, {10.0, 7.0}, {100.0, -40.0}};
    double field_dev = 0.0;
    for (const auto& x : points) field_dev = std::max(field_dev, std::abs(u_d(x) - u_c(x)));

    report(6, density_dev <= 1e-10 && field_dev <= 1e-10,
           "density factor-2 deviation " + fmt(density_dev) + ", field deviation " +
               fmt(field_dev));
}

// 7. The exterior field decays monotonically onto its far-field constant.
void criterion_7() {
    const BoundaryCurve ellipse = msymm::make_builtin("ellipse", {1.0, 2.0});
    const Problem problem = msymm::make_problem(ellipse, Convention::doubled, exp_sin, 0.0);
    const ExteriorField u(ellipse, Convention::doubled,
                          msymm::solve(problem, MethodKind::LS, 12).density);
    bool ok = true;
    double last = std::numeric_limits<double>::infinity(), at_1e10 = 0.0;
    for (const double radius : {1e2, 1e4, 1e6, 1e8, 1e10}) {
        const double diff = std::abs(u(Eigen::Vector2d(radius, 0.0)) - u.far_field());
        ok = ok && diff <= last;
        last = diff;
        if (radius == 1e10) at_1e10 = diff;
    }
    ok = ok && at_1e10 <= 1e-6;
    report(7, ok, "far-field decay monotone, |u - u_inf| = " + fmt(at_1e10) + " at R = 1e10");
}

// 8. Near-boundary grid error shrinks with n and is below 1e-3 by n = 8.
void criterion_8() {
    msymm::ExperimentConfig config;
    config.methods = {MethodKind::LS};
    config.n_values = {2, 4, 6, 8};
    const std::vector<msymm::RunRecord> records = msymm::run_errgrid(config, 32);
    bool ok = records.size() == 4;
    double last = std::numeric_limits<double>::infinity(), final_err = 0.0;
    for (const msymm::RunRecord& rec : records) {
        ok = ok && rec.err_grid.has_value() && *rec.err_grid <= last;
        last = final_err = rec.err_grid.value_or(0.0);
    }
    ok = ok && final_err <= 1e-3;
    report(8, ok, "grid error non-increasing, Err(8) = " + fmt(final_err));
}

// 9. The selftest runs all four methods and states the DLS comparison.
void criterion_9() {
    std::ostringstream out;
    const int rc = msymm::selftest(out);
    const std::string text = out.str();
    const bool ok = rc == 0 &&
                    text.find("DLS degradation relative to LS") != std::string::npos &&
                    text.find("GC") != std::string::npos && text.find("n=20") != std::string::npos;
    report(9, ok, "selftest diagnostic emitted, " + std::to_string(text.size()) + " bytes");
}

// 10. Unit density on the circle: the field is the constant 2 e^{1/2}.
void criterion_10() {
    const BoundaryCurve circle = msymm::make_builtin("circle", {kA});
    const ExteriorField u(circle, Convention::doubled, TrigPoly::constant(8, 1.0));
    const double expected = 2.0 * std::exp(0.5);
    const Eigen::Vector2d points[8] = {{1.0, 0.0},   {0.0, -2.0},   {3.0, 4.0},
                                       {-0.7, 0.4},  {10.0, -1.0},  {-50.0, 50.0},
                                       {1e3, 250.0}, {6e5, 8e5}};  // |last| = 1e6
    double worst = 0.0;
    for (const auto& x : points) worst = std::max(worst, std::abs(u(x) - expected));
    report(10, worst <= 1e-10, "constant circle field deviation " + fmt(worst));
}

}  // namespace

int main() {
    const Timer total;
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::printf("%d/10 criteria passed in %.2f s\n", 10 - g_failures, total.seconds());
    return g_failures == 0 ? 0 : 1;
}
