#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oneform/analysis.hpp"

namespace oneform {

struct ExperimentConfig {
    std::string experiment;
    std::vector<int> sizes;           // --L, repeatable
    double grid_start = 0, grid_stop = 0, grid_step = 0;
    bool grid_set = false;
    std::string decoder = "mwpm";
    int samples = 1000;
    uint64_t seed = 0;
    bool seed_set = false;            // mandatory, no wall-clock default
    std::string out_path;

    // exact-mode / model extras
    int lx = 0, ly = 0;
    double theta = -1;
    double gx = -1, gz = -1;
    double hx = -1, hz = 0;
    int lsub = 0;
    double xc = 0, nu = 0;
    bool xc_set = false;
    std::string in_path;

    std::vector<double> grid_values() const;
    std::string echo() const;  // canonical config string for file stamps
};

// Runs one experiment, writing <out>.csv-style data plus a JSON summary at
// <out>.summary.json.  Deterministic for fixed (config, seed) regardless of
// ONEFORM_WORKERS.  Throws std::invalid_argument / runtime_error on bad
// configs; no partial outputs are left behind.
void run_experiment(const ExperimentConfig& cfg);

// pipeline pieces shared with the acceptance suite
struct WzPoint {
    int L = 0;
    double p = 0;
    double mean = 0, stderr_ = 0;
    int n = 0;
};
std::vector<WzPoint> wz_scan(const std::vector<int>& sizes, const std::vector<double>& grid,
                             const std::string& decoder, int samples, uint64_t seed);
std::vector<Curve> wz_curves(const std::vector<WzPoint>& pts);

struct RgPoint {
    int L = 0;
    double theta = 0;
    int n_rg = 0;
    double mean = 0, stderr_ = 0;
    int n = 0;
};
std::vector<RgPoint> rg_disorder_scan(const std::vector<int>& sizes,
                                      const std::vector<double>& thetas, int samples,
                                      uint64_t seed);

struct PlanarPoint {
    int A = 0, sys_w = 0, sys_h = 0;
    double p = 0;
    double mean = 0, stderr_ = 0;
    int n = 0;
};
std::vector<PlanarPoint> planar_scan(const std::vector<int>& a_sizes,
                                     const std::vector<double>& grid, int samples,
                                     uint64_t seed);

struct LocalPoint {
    int L = 0;
    double p = 0;
    double clear_fraction = 0, clear_err = 0;
    double final_density = 0;
    int n = 0;
};
std::vector<LocalPoint> local_scan(int L, const std::vector<double>& grid, int samples,
                                   uint64_t seed);
// 50% clear-fraction crossing, linearly interpolated
std::optional<double> local_threshold(const std::vector<LocalPoint>& pts);

} // namespace oneform
