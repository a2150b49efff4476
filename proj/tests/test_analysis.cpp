#include <doctest.h>

#include <cmath>

#include "oneform/analysis.hpp"
#include "oneform/rng.hpp"

using namespace oneform;

namespace {

// finite-size scaling family y = f((x - xc) L^{1/nu}) with a smooth sigmoid
Curve scaling_curve(double L, double xc, double nu, double noise, uint64_t seed,
                    double x0 = 0.08, double x1 = 0.13, int npts = 26) {
    Curve c;
    c.label = L;
    Rng rng(seed, 0, static_cast<uint64_t>(L));
    for (int i = 0; i < npts; ++i) {
        const double x = x0 + (x1 - x0) * i / (npts - 1);
        const double u = (x - xc) * std::pow(L, 1.0 / nu);
        double y = 1.0 / (1.0 + std::exp(8 * u));
        if (noise > 0) {
            const double g = std::sqrt(-2 * std::log(std::max(rng.uniform(), 1e-300))) *
                             std::cos(2 * M_PI * rng.uniform());
            y += noise * g;
        }
        c.x.push_back(x);
        c.y.push_back(y);
        c.yerr.push_back(noise);
        c.n.push_back(1000);
    }
    return c;
}

} // namespace

TEST_CASE("crossing of two exact lines") {
    Curve a, b;
    a.label = 1;
    b.label = 2;
    for (int i = 0; i <= 10; ++i) {
        const double x = i / 10.0;
        a.x.push_back(x);
        a.y.push_back(x);
        a.yerr.push_back(0);
        b.x.push_back(x);
        b.y.push_back(1 - x);
        b.yerr.push_back(0);
    }
    CrossingEstimate est = crossing_estimate({a, b});
    CHECK(est.found);
    CHECK(est.x_c == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("synthetic sigmoid family recovers the crossing") {
    std::vector<Curve> curves;
    for (double L : {8, 12, 16, 24}) curves.push_back(scaling_curve(L, 0.1031, 1.49, 0.01, 7));
    CrossingEstimate est = crossing_estimate(curves);
    CHECK(est.found);
    CHECK(std::abs(est.x_c - 0.1031) < 0.003);
    CHECK(est.err > 0);
    CHECK(est.pairwise.size() == 6);
}

TEST_CASE("curves that never cross report no crossing") {
    Curve a, b;
    a.label = 1;
    b.label = 2;
    for (int i = 0; i <= 5; ++i) {
        a.x.push_back(i);
        a.y.push_back(1.0);
        a.yerr.push_back(0);
        b.x.push_back(i);
        b.y.push_back(0.0);
        b.yerr.push_back(0);
    }
    CrossingEstimate est = crossing_estimate({a, b});
    CHECK(!est.found);
}

TEST_CASE("crossing estimate is affine covariant") {
    std::vector<Curve> curves, mapped;
    for (double L : {8, 16}) {
        Curve c = scaling_curve(L, 0.1031, 1.49, 0.0, 1);
        curves.push_back(c);
        Curve m = c;
        for (auto& x : m.x) x = 3.0 * x + 1.0;
        mapped.push_back(m);
    }
    CrossingEstimate a = crossing_estimate(curves);
    CrossingEstimate b = crossing_estimate(mapped);
    REQUIRE(a.found);
    REQUIRE(b.found);
    CHECK(b.x_c == doctest::Approx(3.0 * a.x_c + 1.0).epsilon(1e-9));
}

TEST_CASE("data collapse") {
    SUBCASE("pointwise-coincident curves have quality exactly zero") {
        std::vector<Curve> flat;
        for (double L : {8, 16, 32}) {
            Curve c;
            c.label = L;
            for (int i = 0; i <= 10; ++i) {
                c.x.push_back(0.1 * i);
                c.y.push_back(0.75);
                c.yerr.push_back(0);
            }
            flat.push_back(c);
        }
        CHECK(data_collapse(flat, 0.3, 1.0).quality == 0.0);
        CHECK(data_collapse(flat, 0.7, 2.5).quality == 0.0);
    }

    SUBCASE("quality is minimized near the generating parameters") {
        std::vector<Curve> curves;
        for (double L : {8, 12, 16, 24}) curves.push_back(scaling_curve(L, 0.1031, 1.49, 0.0, 3));
        const double q_true = data_collapse(curves, 0.1031, 1.49).quality;
        // grid search at resolution 0.01 in x_c and 0.05 in nu
        double best_q = 1e300, best_xc = 0, best_nu = 0;
        for (double xc = 0.0831; xc <= 0.1281 + 1e-9; xc += 0.01)
            for (double nu = 0.99; nu <= 2.0; nu += 0.05) {
                const double q = data_collapse(curves, xc, nu).quality;
                if (q < best_q) {
                    best_q = q;
                    best_xc = xc;
                    best_nu = nu;
                }
            }
        CHECK(std::abs(best_xc - 0.1031) < 0.005);
        CHECK(std::abs(best_nu - 1.49) < 0.025);
        CHECK(q_true <= best_q + 1e-15);
        // a deliberately wrong exponent is strictly worse
        CHECK(data_collapse(curves, 0.1031, 3.0).quality > q_true);
        CHECK(data_collapse(curves, 0.1031, 0.8).quality > q_true);
    }

    SUBCASE("input validation") {
        std::vector<Curve> curves;
        for (double L : {8, 16}) curves.push_back(scaling_curve(L, 0.1, 1.5, 0.0, 4));
        CHECK_THROWS(data_collapse(curves, 0.1, -1.0));
    }
}
