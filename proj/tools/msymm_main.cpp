#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "msymm/experiment.hpp"

namespace {

// Raw option values shared by every subcommand; converted (and validated)
// into an ExperimentConfig only after parsing succeeds.
struct CliOptions {
    std::string curve = "ellipse(1;2)";
    std::vector<std::string> methods;
    std::vector<int> n_values;
    std::vector<double> deltas;
    std::string density = "exp-sin";
    int rhs_degree = 0;
    std::string convention = "doubled";
    std::string out;
};

void add_common_options(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--curve", opt.curve, "boundary curve: circle(a), ellipse(a;b), expblob");
    cmd->add_option("--method", opt.methods, "projection method (repeatable): LS, DLS, BG, GC");
    cmd->add_option("--n", opt.n_values, "trigonometric degree (repeatable)");
    cmd->add_option("--delta", opt.deltas, "noise level (repeatable)");
    cmd->add_option("--density", opt.density,
                    "synthetic exact density: exp-sin, exp-cos, sin, one, zero");
    cmd->add_option("--rhs-degree", opt.rhs_degree,
                    "forward-map degree for the manufactured data (0 = auto max(4n, 32))");
    cmd->add_option("--convention", opt.convention, "operator normalization: doubled or classic");
    cmd->add_option("--out", opt.out, "output CSV path (default stdout)");
    cmd->set_config("--config", "", "flat key=value config file; command line overrides");
}

msymm::ExperimentConfig build_config(const CliOptions& opt) {
    msymm::ExperimentConfig config;
    config.curve_spec = opt.curve;
    if (!opt.methods.empty()) {
        config.methods.clear();
        for (const std::string& name : opt.methods)
            config.methods.push_back(msymm::parse_method(name));
    }
    if (!opt.n_values.empty()) {
        config.n_values = opt.n_values;
        std::sort(config.n_values.begin(), config.n_values.end());
        config.n_values.erase(std::unique(config.n_values.begin(), config.n_values.end()),
                              config.n_values.end());
    }
    if (!opt.deltas.empty()) config.deltas = opt.deltas;
    config.density = opt.density;
    config.rhs_degree = opt.rhs_degree;
    config.convention = msymm::parse_convention(opt.convention);
    config.output = opt.out;
    return config;
}

// Output sink: file when --out is given, stdout otherwise.
class OutputSink {
  public:
    explicit OutputSink(const std::string& path) {
        if (path.empty()) return;
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_) throw std::invalid_argument("cannot open output file '" + path + "'");
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

  private:
    std::unique_ptr<std::ofstream> file_;
};

Eigen::Vector2d parse_direction(const std::string& spec) {
    std::string body = spec;
    std::replace(body.begin(), body.end(), ';', ',');
    const auto comma = body.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("direction '" + spec + "' is not of the form dx,dy");
    std::size_t used = 0;
    const double dx = std::stod(body.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("bad direction component in '" + spec + "'");
    const std::string rest = body.substr(comma + 1);
    const double dy = std::stod(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("bad direction component in '" + spec + "'");
    const Eigen::Vector2d d(dx, dy);
    if (d.norm() == 0.0) throw std::invalid_argument("direction must be nonzero");
    return d;
}

// Single solve at one (method, n, delta); the one context where a solver
// failure aborts the program (exit code 2) instead of marking a row.
int run_solve(const CliOptions& opt) {
    msymm::ExperimentConfig config = build_config(opt);
    const int n = config.n_values.empty() ? 12 : config.n_values.back();
    const double delta = config.deltas.empty() ? 0.0 : config.deltas.front();
    const msymm::BoundaryCurve curve = msymm::parse_curve(config.curve_spec);
    const msymm::Problem problem =
        msymm::make_problem(curve, config.convention, msymm::density_function(config.density),
                            delta, config.rhs_degree);

    std::vector<msymm::RunRecord> records;
    for (const msymm::MethodKind m : config.methods) {
        const msymm::SolveReport report = msymm::solve(problem, m, n);
        msymm::RunRecord rec;
        rec.curve = curve.label;
        rec.method = msymm::to_string(m);
        rec.n = n;
        rec.delta = delta;
        rec.r = report.r;
        rec.residual = report.residual;
        rec.condition = report.condition;
        rec.elapsed_s = report.elapsed_s;
        const msymm::ExteriorField field(curve, config.convention, report.density);
        rec.u_inf = field.far_field();
        records.push_back(rec);
    }
    OutputSink sink(config.output);
    msymm::write_csv(sink.stream(), records);
    return 0;
}

int run_convergence_cmd(const CliOptions& opt) {
    const msymm::ExperimentConfig config = build_config(opt);
    const std::vector<msymm::RunRecord> records = msymm::run_convergence(config);
    OutputSink sink(config.output);
    msymm::write_csv(sink.stream(), records);
    return 0;
}

int run_farfield_cmd(const CliOptions& opt, const std::vector<std::string>& direction_specs,
                     std::vector<double> radii) {
    const msymm::ExperimentConfig config = build_config(opt);
    std::vector<Eigen::Vector2d> directions;
    for (const std::string& spec : direction_specs) directions.push_back(parse_direction(spec));
    if (directions.empty()) directions.push_back(Eigen::Vector2d(1.0, 0.0));
    if (radii.empty()) radii = {1e2, 1e4, 1e6, 1e8, 1e10};

    const msymm::FarfieldResult result = msymm::run_farfield(config, directions, radii);
    OutputSink sink(config.output);
    msymm::write_csv(sink.stream(), result.summary);
    if (config.output.empty()) {
        std::cout << "\n";
        msymm::write_farfield_csv(std::cout, result.samples);
    } else {
        OutputSink radii_sink(config.output + ".radii.csv");
        msymm::write_farfield_csv(radii_sink.stream(), result.samples);
    }
    return 0;
}

int run_errgrid_cmd(CliOptions opt, int n_ref) {
    if (opt.n_values.empty()) opt.n_values = {2, 4, 6, 8};
    const msymm::ExperimentConfig config = build_config(opt);
    const std::vector<msymm::RunRecord> records = msymm::run_errgrid(config, n_ref);
    OutputSink sink(config.output);
    msymm::write_csv(sink.stream(), records);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exterior Laplace Dirichlet solver on analytic curves via the modified "
                 "single-layer integral equation"};
    app.require_subcommand(1);
    app.allow_config_extras(CLI::config_extras_mode::error);

    CliOptions opt;
    std::vector<std::string> direction_specs;
    std::vector<double> radii;
    int n_ref = 32;

    // Common options live on the root command: config files are processed by
    // the root parser only, and fallthrough lets them follow the subcommand.
    add_common_options(&app, opt);

    app.add_subcommand("solve", "single solve, CSV row per method")->fallthrough();

    app.add_subcommand("convergence", "sweep over (method, n, delta)")->fallthrough();

    CLI::App* far_cmd =
        app.add_subcommand("farfield", "field values at radius*direction plus the limit");
    far_cmd->fallthrough();
    far_cmd->add_option("--direction", direction_specs, "sampling direction dx,dy (repeatable)");
    far_cmd->add_option("--radii", radii, "sampling radii, ascending (repeatable)");

    CLI::App* grid_cmd =
        app.add_subcommand("errgrid", "near-boundary grid error against a reference solve");
    grid_cmd->fallthrough();
    grid_cmd->add_option("--n-ref", n_ref, "reference solve degree");

    app.add_subcommand("selftest", "fixed four-method diagnostic run")->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (app.got_subcommand("solve")) return run_solve(opt);
        if (app.got_subcommand("convergence")) return run_convergence_cmd(opt);
        if (app.got_subcommand("farfield")) return run_farfield_cmd(opt, direction_specs, radii);
        if (app.got_subcommand("errgrid")) return run_errgrid_cmd(opt, n_ref);
        return msymm::selftest(std::cout);
    } catch (const msymm::SolverFailure& e) {
        std::cerr << "solver failure: " << e.what()
                  << " (condition estimate " << e.condition_estimate() << ")\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
