#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "msymm/potential.hpp"
#include "msymm/solvers.hpp"

namespace msymm {

// One sweep description; every run is deterministic given the config.
struct ExperimentConfig {
    std::string curve_spec = "ellipse(1;2)";
    std::vector<MethodKind> methods = {MethodKind::LS};
    std::vector<int> n_values = {2, 4, 6, 8, 10, 12};
    std::vector<double> deltas = {0.0};
    std::string density = "exp-sin";
    int rhs_degree = 0;  // 0 = auto max(4n, 32); positive = frozen degree
    Convention convention = Convention::doubled;
    unsigned seed = 0;  // reserved
    std::string output;  // empty = stdout
};

// One CSV row. Absent optionals print as "failed" on failed rows and as an
// empty err_grid field otherwise.
struct RunRecord {
    std::string curve;
    std::string method;
    int n = 0;
    double delta = 0.0;
    std::optional<double> r;
    std::optional<double> residual;
    std::optional<double> condition;
    double elapsed_s = 0.0;
    std::optional<double> u_inf;
    std::optional<double> err_grid;
    bool failed = false;
};

// One sampled radius of a far-field sweep; written to a companion table
// because the main CSV schema has no radius column.
struct FarfieldSample {
    std::string curve;
    std::string method;
    int n = 0;
    double dx = 0.0, dy = 0.0;
    double radius = 0.0;
    double u = 0.0;
    double u_inf = 0.0;
    double abs_diff = 0.0;
};

struct FarfieldResult {
    std::vector<RunRecord> summary;  // one row per method
    std::vector<FarfieldSample> samples;
};

// Named synthetic densities: exp-sin (default), exp-cos, sin, one, zero.
std::function<double(double)> density_function(const std::string& name);

// One record per (method, delta, n); solver failures are recorded per row
// and the sweep continues.
std::vector<RunRecord> run_convergence(const ExperimentConfig& config);

// Solves once per method at the largest configured n, then samples the field
// at radius*direction for every direction and radius (ascending).
FarfieldResult run_farfield(const ExperimentConfig& config,
                            const std::vector<Eigen::Vector2d>& directions,
                            const std::vector<double>& radii);

// Err column against a reference solve of the same method at n_ref.
std::vector<RunRecord> run_errgrid(const ExperimentConfig& config, int n_ref = 32);

// Fixed diagnostic: all four methods at n in {10, 20}, delta = 0, on
// ellipse(1;2); reports r and condition per run and states whether DLS
// degradation relative to LS is observed. Returns 0 (diagnostic only).
int selftest(std::ostream& out);

extern const char* const kCsvHeader;
void write_csv(std::ostream& out, const std::vector<RunRecord>& records);
void write_farfield_csv(std::ostream& out, const std::vector<FarfieldSample>& samples);

}  // namespace msymm
