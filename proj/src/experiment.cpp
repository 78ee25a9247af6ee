#include "msymm/experiment.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

namespace msymm {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(9) << v;
    return os.str();
}

std::string fmt(const std::optional<double>& v, bool failed) {
    if (v) return fmt(*v);
    return failed ? "failed" : "";
}

// The named synthetic densities are stated in the doubled normalization, so
// both conventions pose the same boundary data: a classic run's exact density
// is 1/scale times larger and its potentials coincide with the doubled run's.
std::function<double(double)> config_density(const ExperimentConfig& config) {
    const auto base = density_function(config.density);
    const double inv = 1.0 / convention_scale(config.convention);
    if (inv == 1.0) return base;
    return [base, inv](double t) { return inv * base(t); };
}

RunRecord base_record(const BoundaryCurve& curve, MethodKind m, int n, double delta) {
    RunRecord rec;
    rec.curve = curve.label;
    rec.method = to_string(m);
    rec.n = n;
    rec.delta = delta;
    return rec;
}

void fill_from_report(RunRecord& rec, const SolveReport& report) {
    rec.r = report.r;
    rec.residual = report.residual;
    rec.condition = report.condition;
    rec.elapsed_s = report.elapsed_s;
}

RunRecord solved_record(const ExperimentConfig& config, const BoundaryCurve& curve,
                        const Problem& problem, MethodKind m, int n, double delta) {
    RunRecord rec = base_record(curve, m, n, delta);
    try {
        const SolveReport report = solve(problem, m, n);
        fill_from_report(rec, report);
        rec.u_inf = ExteriorField(curve, config.convention, report.density).far_field();
    } catch (const SolverFailure& e) {
        rec.failed = true;
        rec.condition = e.condition_estimate();
    }
    return rec;
}

}  // namespace

std::function<double(double)> density_function(const std::string& name) {
    if (name == "exp-sin") return [](double t) { return std::exp(std::sin(t)); };
    if (name == "exp-cos") return [](double t) { return std::exp(std::cos(t)); };
    if (name == "sin") return [](double t) { return std::sin(t); };
    if (name == "one") return [](double) { return 1.0; };
    if (name == "zero") return [](double) { return 0.0; };
    throw std::invalid_argument("unknown density '" + name +
                                "'; known: exp-sin, exp-cos, sin, one, zero");
}

std::vector<RunRecord> run_convergence(const ExperimentConfig& config) {
    const BoundaryCurve curve = parse_curve(config.curve_spec);
    const auto density = config_density(config);
    std::vector<RunRecord> records;
    for (const MethodKind m : config.methods)
        for (const double delta : config.deltas) {
            const Problem problem =
                make_problem(curve, config.convention, density, delta, config.rhs_degree);
            for (const int n : config.n_values)
                records.push_back(solved_record(config, curve, problem, m, n, delta));
        }
    return records;
}

FarfieldResult run_farfield(const ExperimentConfig& config,
                            const std::vector<Eigen::Vector2d>& directions,
                            const std::vector<double>& radii) {
    for (std::size_t i = 0; i + 1 < radii.size(); ++i)
        if (!(radii[i] > 0) || radii[i] >= radii[i + 1])
            throw std::invalid_argument("run_farfield: radii must be positive ascending");
    if (!radii.empty() && !(radii.back() > 0))
        throw std::invalid_argument("run_farfield: radii must be positive ascending");
    if (config.n_values.empty()) return {};

    const BoundaryCurve curve = parse_curve(config.curve_spec);
    const auto density = config_density(config);
    const int n = config.n_values.back();
    const double delta = config.deltas.empty() ? 0.0 : config.deltas.front();
    const Problem problem =
        make_problem(curve, config.convention, density, delta, config.rhs_degree);

    FarfieldResult result;
    for (const MethodKind m : config.methods) {
        RunRecord rec = base_record(curve, m, n, delta);
        SolveReport report;
        try {
            report = solve(problem, m, n);
        } catch (const SolverFailure& e) {
            rec.failed = true;
            rec.condition = e.condition_estimate();
            result.summary.push_back(rec);
            continue;
        }
        fill_from_report(rec, report);
        const ExteriorField field(curve, config.convention, report.density);
        rec.u_inf = field.far_field();
        result.summary.push_back(rec);
        for (const auto& d : directions)
            for (const double radius : radii) {
                FarfieldSample s;
                s.curve = curve.label;
                s.method = to_string(m);
                s.n = n;
                s.dx = d.x();
                s.dy = d.y();
                s.radius = radius;
                s.u = field(radius * d.normalized());
                s.u_inf = field.far_field();
                s.abs_diff = std::abs(s.u - s.u_inf);
                result.samples.push_back(s);
            }
    }
    return result;
}

std::vector<RunRecord> run_errgrid(const ExperimentConfig& config, int n_ref) {
    const BoundaryCurve curve = parse_curve(config.curve_spec);
    const auto density = config_density(config);
    const double delta = config.deltas.empty() ? 0.0 : config.deltas.front();
    const Problem problem =
        make_problem(curve, config.convention, density, delta, config.rhs_degree);

    std::vector<RunRecord> records;
    for (const MethodKind m : config.methods) {
        const SolveReport ref_report = solve(problem, m, n_ref);
        const ExteriorField reference(curve, config.convention, ref_report.density);
        for (const int n : config.n_values) {
            RunRecord rec = base_record(curve, m, n, delta);
            try {
                const SolveReport report = solve(problem, m, n);
                fill_from_report(rec, report);
                const ExteriorField field(curve, config.convention, report.density);
                rec.u_inf = field.far_field();
                rec.err_grid = err_grid(reference, field);
            } catch (const SolverFailure& e) {
                rec.failed = true;
                rec.condition = e.condition_estimate();
            }
            records.push_back(rec);
        }
    }
    return records;
}

int selftest(std::ostream& out) {
    ExperimentConfig config;
    config.methods = {MethodKind::LS, MethodKind::DLS, MethodKind::BG, MethodKind::GC};
    config.n_values = {10, 20};

    out << "selftest: ellipse(1;2), exp-sin density, delta = 0, doubled convention\n";
    const std::vector<RunRecord> records = run_convergence(config);
    double worst_ratio = 0.0;
    for (const RunRecord& rec : records) {
        out << "  " << rec.method << " n=" << rec.n;
        if (rec.failed) {
            out << "  solver failure, condition=" << fmt(rec.condition, true) << "\n";
            worst_ratio = std::numeric_limits<double>::infinity();
            continue;
        }
        out << "  r=" << fmt(rec.r, false) << "  condition=" << fmt(rec.condition, false)
            << "\n";
    }
    for (const int n : config.n_values) {
        std::optional<double> r_ls, r_dls;
        for (const RunRecord& rec : records)
            if (rec.n == n && !rec.failed) {
                if (rec.method == "LS") r_ls = rec.r;
                if (rec.method == "DLS") r_dls = rec.r;
            }
        if (r_ls && r_dls && *r_ls > 0) worst_ratio = std::max(worst_ratio, *r_dls / *r_ls);
    }
    const bool degraded = worst_ratio > 10.0;
    out << "DLS degradation relative to LS: " << (degraded ? "observed" : "not observed")
        << " (worst r ratio " << fmt(worst_ratio) << ")\n";
    return 0;
}

const char* const kCsvHeader = "curve,method,n,delta,r,residual,condition,elapsed_s,u_inf,err_grid";

void write_csv(std::ostream& out, const std::vector<RunRecord>& records) {
    out << kCsvHeader << "\n";
    for (const RunRecord& rec : records) {
        out << rec.curve << ',' << rec.method << ',' << rec.n << ',' << fmt(rec.delta) << ','
            << fmt(rec.r, rec.failed) << ',' << fmt(rec.residual, rec.failed) << ','
            << fmt(rec.condition, rec.failed) << ',' << fmt(rec.elapsed_s) << ','
            << fmt(rec.u_inf, rec.failed) << ',' << fmt(rec.err_grid, false) << "\n";
    }
}

void write_farfield_csv(std::ostream& out, const std::vector<FarfieldSample>& samples) {
    out << "curve,method,n,dx,dy,radius,u,u_inf,abs_diff\n";
    for (const FarfieldSample& s : samples) {
        out << s.curve << ',' << s.method << ',' << s.n << ',' << fmt(s.dx) << ',' << fmt(s.dy)
            << ',' << fmt(s.radius) << ',' << fmt(s.u) << ',' << fmt(s.u_inf) << ','
            << fmt(s.abs_diff) << "\n";
    }
}

}  // namespace msymm
