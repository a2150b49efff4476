#include "oneform/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oneform/rng.hpp"

namespace oneform {

namespace {

double interp(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
    if (x <= xs.front()) return ys.front();
    if (x >= xs.back()) return ys.back();
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const size_t j = it - xs.begin();
    const double t = (x - xs[j - 1]) / (xs[j] - xs[j - 1]);
    return ys[j - 1] + t * (ys[j] - ys[j - 1]);
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const size_t n = v.size();
    return (n % 2) ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// crossings of two curves over the overlap of their grids
std::vector<double> pair_crossings(const Curve& a, const Curve& b,
                                   const std::vector<double>& ya,
                                   const std::vector<double>& yb) {
    const double lo = std::max(a.x.front(), b.x.front());
    const double hi = std::min(a.x.back(), b.x.back());
    if (lo >= hi) return {};
    std::vector<double> grid;
    for (double x : a.x)
        if (x >= lo && x <= hi) grid.push_back(x);
    for (double x : b.x)
        if (x >= lo && x <= hi) grid.push_back(x);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    if (grid.size() < 2) return {};

    std::vector<double> out;
    double dprev = interp(a.x, ya, grid[0]) - interp(b.x, yb, grid[0]);
    for (size_t i = 1; i < grid.size(); ++i) {
        const double d = interp(a.x, ya, grid[i]) - interp(b.x, yb, grid[i]);
        if (dprev == 0) {
            out.push_back(grid[i - 1]);
        } else if (dprev * d < 0) {
            out.push_back(grid[i - 1] + (grid[i] - grid[i - 1]) * dprev / (dprev - d));
        }
        dprev = d;
    }
    if (dprev == 0) out.push_back(grid.back());
    return out;
}

double median_crossing(const std::vector<Curve>& curves,
                       const std::vector<std::vector<double>>& ys, bool& any) {
    std::vector<double> pw;
    for (size_t i = 0; i < curves.size(); ++i)
        for (size_t j = i + 1; j < curves.size(); ++j) {
            auto c = pair_crossings(curves[i], curves[j], ys[i], ys[j]);
            if (!c.empty()) pw.push_back(median(c));
        }
    any = !pw.empty();
    return any ? median(pw) : 0.0;
}

} // namespace

CrossingEstimate crossing_estimate(const std::vector<Curve>& curves) {
    if (curves.size() < 2) throw std::invalid_argument("need at least two curves");
    for (const auto& c : curves) {
        if (c.x.size() < 2 || c.x.size() != c.y.size())
            throw std::invalid_argument("curve grids must have >= 2 points");
        if (!std::is_sorted(c.x.begin(), c.x.end()))
            throw std::invalid_argument("curve grid must be increasing");
    }

    CrossingEstimate est;
    for (size_t i = 0; i < curves.size(); ++i)
        for (size_t j = i + 1; j < curves.size(); ++j) {
            auto c = pair_crossings(curves[i], curves[j], curves[i].y, curves[j].y);
            if (c.empty()) {
                est.found = false;
                est.pairwise.clear();
                return est;  // explicit no-crossing report
            }
            est.pairwise.push_back(median(c));
        }
    est.found = true;
    est.x_c = median(est.pairwise);
    const auto [mn, mx] = std::minmax_element(est.pairwise.begin(), est.pairwise.end());
    est.half_spread = 0.5 * (*mx - *mn);

    // Gaussian bootstrap at the per-point stderr (fixed internal key, so the
    // estimate is a pure function of the inputs)
    constexpr int kResamples = 200;
    std::vector<double> boots;
    std::vector<std::vector<double>> ys(curves.size());
    for (int r = 0; r < kResamples; ++r) {
        Rng rng(0x0bf5a5edu, 7, r);
        for (size_t i = 0; i < curves.size(); ++i) {
            ys[i] = curves[i].y;
            for (size_t k = 0; k < ys[i].size(); ++k) {
                const double se = k < curves[i].yerr.size() ? curves[i].yerr[k] : 0.0;
                // Box-Muller from two counter draws
                const double u1 = std::max(rng.uniform(), 1e-300);
                const double u2 = rng.uniform();
                ys[i][k] += se * std::sqrt(-2 * std::log(u1)) * std::cos(2 * M_PI * u2);
            }
        }
        bool any = false;
        const double xc = median_crossing(curves, ys, any);
        if (any) boots.push_back(xc);
    }
    if (boots.size() > 1) {
        double m = 0;
        for (double b : boots) m += b;
        m /= boots.size();
        double v = 0;
        for (double b : boots) v += (b - m) * (b - m);
        est.bootstrap_err = std::sqrt(v / (boots.size() - 1));
    }
    est.err = std::max(est.half_spread, est.bootstrap_err);
    return est;
}

CollapseResult data_collapse(const std::vector<Curve>& curves, double x_c, double nu) {
    if (nu <= 0) throw std::invalid_argument("nu must be positive");
    if (curves.size() < 2) throw std::invalid_argument("need at least two curves");

    std::vector<std::vector<double>> us(curves.size());
    double lo = -1e300, hi = 1e300;
    for (size_t i = 0; i < curves.size(); ++i) {
        const double scale = std::pow(curves[i].label, 1.0 / nu);
        for (double x : curves[i].x) us[i].push_back((x - x_c) * scale);
        lo = std::max(lo, us[i].front());
        hi = std::min(hi, us[i].back());
    }
    if (lo >= hi) throw std::invalid_argument("no common support after rescaling");

    std::vector<double> probes;
    for (const auto& u : us)
        for (double v : u)
            if (v >= lo && v <= hi) probes.push_back(v);
    std::sort(probes.begin(), probes.end());
    probes.erase(std::unique(probes.begin(), probes.end()), probes.end());

    CollapseResult res;
    double acc = 0;
    for (double u : probes) {
        double mean = 0;
        std::vector<double> vals(curves.size());
        for (size_t i = 0; i < curves.size(); ++i) {
            vals[i] = interp(us[i], curves[i].y, u);
            mean += vals[i];
        }
        mean /= curves.size();
        double var = 0;
        for (double v : vals) var += (v - mean) * (v - mean);
        var /= curves.size();
        res.u.push_back(u);
        res.spread.push_back(var);
        acc += var;
    }
    res.n_probes = static_cast<int>(probes.size());
    res.quality = probes.empty() ? 0.0 : acc / probes.size();
    return res;
}

} // namespace oneform
