#pragma once

#include <vector>

namespace oneform {

struct Curve {
    double label = 0;  // system size L
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> yerr;
    std::vector<int> n;  // samples per point (optional)
};

struct CrossingEstimate {
    bool found = false;
    double x_c = 0;
    double err = 0;          // max(half-spread, bootstrap)
    double half_spread = 0;
    double bootstrap_err = 0;
    std::vector<double> pairwise;
};

// Pairwise crossings from local linear interpolation, aggregated by the
// median; the error combines the pairwise half-spread with a 200-resample
// Gaussian bootstrap at the reported stderr.
CrossingEstimate crossing_estimate(const std::vector<Curve>& curves);

struct CollapseResult {
    double quality = 0;  // mean squared vertical spread; lower is better
    int n_probes = 0;
    std::vector<double> u;      // rescaled abscissa of the probe points
    std::vector<double> spread; // per-probe variance across curves
};

// Rescale x -> (x - x_c) L^{1/nu} and score the vertical spread between the
// size-curves on their common support.
CollapseResult data_collapse(const std::vector<Curve>& curves, double x_c, double nu);

} // namespace oneform
