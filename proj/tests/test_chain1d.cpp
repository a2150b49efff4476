#include <doctest.h>

#include <cmath>

#include <Eigen/Dense>

#include "oneform/chain1d.hpp"
#include "oneform/rng.hpp"

using namespace oneform;

namespace {

int site(uint32_t b, int i, int L) { return (b >> (((i % L) + L) % L)) & 1; }

// dense Ising Hamiltonian for the Eigen-based oracle
Eigen::MatrixXd dense_ising(int L, double hx, double hz) {
    const int dim = 1 << L;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (int b = 0; b < dim; ++b) {
        double diag = 0;
        for (int i = 0; i < L; ++i) {
            diag -= (site(b, i, L) ? -1 : 1) * (site(b, i + 1, L) ? -1 : 1);
            diag -= hz * (site(b, i, L) ? -1 : 1);
        }
        h(b, b) = diag;
        for (int i = 0; i < L; ++i) h(b ^ (1 << i), b) -= hx;
    }
    return h;
}

// exhaustive binning oracle: group bitstrings into domain-wall sectors
// (pairs {b, ~b}) and sum the larger flip-class weight per sector
double criterion_oracle(double theta, int L) {
    const double c2 = std::pow(std::cos(theta / 2), 2);
    const double s2 = std::pow(std::sin(theta / 2), 2);
    double acc = 0;
    const uint32_t full = (L == 32) ? 0xffffffffu : ((1u << L) - 1);
    for (uint32_t b = 0; b < (1u << L); ++b) {
        const int k = __builtin_popcount(b);
        const int kf = __builtin_popcount(b ^ full);
        const double w = std::pow(c2, L - k) * std::pow(s2, k);
        const double wf = std::pow(c2, L - kf) * std::pow(s2, kf);
        acc += 0.5 * std::max(w, wf);  // each sector visited twice
    }
    return acc;
}

} // namespace

TEST_CASE("criterion endpoints and oracle agreement") {
    CHECK(criterion_1d(0.0, 8) == 1.0);
    CHECK(criterion_1d(M_PI / 2, 8) == doctest::Approx(0.5).epsilon(1e-14));
    for (int L : {2, 4, 6, 8, 10, 12, 14}) {
        for (double theta : {0.0, M_PI / 8, M_PI / 4, 3 * M_PI / 8, M_PI / 2}) {
            INFO("L=", L, " theta=", theta);
            CHECK(criterion_1d(theta, L) ==
                  doctest::Approx(criterion_oracle(theta, L)).epsilon(1e-12));
        }
    }
    CHECK(criterion_1d(M_PI / 3, 10) ==
          doctest::Approx(criterion_oracle(M_PI / 3, 10)).epsilon(1e-12));
}

TEST_CASE("criterion is non-increasing in theta") {
    for (int L : {4, 10, 40, 60}) {
        double prev = 2;
        for (int k = 0; k <= 24; ++k) {
            const double v = criterion_1d(k * (M_PI / 2) / 24, L);
            CHECK(v <= prev + 1e-14);
            prev = v;
        }
    }
}

TEST_CASE("ising ground state against independent solvers") {
    SUBCASE("classical limits") {
        ChainState up = ising_ground_state(8, 0.0, 0.5);
        CHECK(std::abs(up.amp[0]) == doctest::Approx(1.0));
        CHECK(up.energy == doctest::Approx(-8 - 0.5 * 8));

        ChainState plus = ising_ground_state(8, 50.0, 0.0);
        // <X_i> > 0.999 for every site
        for (int i = 0; i < 8; ++i) {
            double x = 0;
            for (uint32_t b = 0; b < 256; ++b) x += plus.amp[b] * plus.amp[b ^ (1u << i)];
            CHECK(x > 0.999);
        }
    }

    SUBCASE("dense diagonalization oracle at L = 10") {
        for (auto [hx, hz] : {std::pair{0.7, 0.0}, std::pair{1.0, 0.3}, std::pair{2.0, 0.2}}) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense_ising(10, hx, hz));
            ChainState st = ising_ground_state(10, hx, hz);
            INFO("hx=", hx, " hz=", hz);
            CHECK(st.energy == doctest::Approx(es.eigenvalues()(0)).epsilon(1e-11));
            double overlap = 0;
            for (int b = 0; b < 1024; ++b) overlap += st.amp[b] * es.eigenvectors()(b, 0);
            if (hz != 0) CHECK(std::abs(overlap) == doctest::Approx(1.0).epsilon(1e-9));
        }
    }

    SUBCASE("shifted power-method oracle at L = 12") {
        const int L = 12, dim = 1 << L;
        const double hx = 0.5;
        ChainState st = ising_ground_state(L, hx, 0.0);
        // (cI - H) preserves the flip parity, so a symmetric start stays in
        // the even sector that the Lanczos route pins
        const double c = L * (1 + hx) + 5;
        std::vector<double> v(dim, 1.0 / std::sqrt(double(dim))), w(dim);
        double energy = 0;
        for (int it = 0; it < 4000; ++it) {
            for (int b = 0; b < dim; ++b) {
                double diag = 0;
                for (int i = 0; i < L; ++i)
                    diag -= (site(b, i, L) ? -1 : 1) * (site(b, i + 1, L) ? -1 : 1);
                w[b] = (c - diag) * v[b];
            }
            for (int b = 0; b < dim; ++b) {
                const double vb = v[b];
                for (int i = 0; i < L; ++i) w[b ^ (1 << i)] += hx * vb;
            }
            double n2 = 0;
            for (double x : w) n2 += x * x;
            const double inv = 1 / std::sqrt(n2);
            for (int b = 0; b < dim; ++b) v[b] = w[b] * inv;
            energy = c - std::sqrt(n2);  // Rayleigh estimate after many iters
        }
        CHECK(st.energy == doctest::Approx(energy).epsilon(1e-9));
    }
}

TEST_CASE("majority indicator") {
    SUBCASE("deep ferromagnet") {
        ChainState st = ising_ground_state(12, 0.2, 0.0);
        IndicatorPoint pt = majority_indicator(st, 4000, 91);
        CHECK(pt.mean > 0.99);
    }
    SUBCASE("paramagnet decays with L") {
        double prev = 1.0;
        for (int L : {8, 10, 12}) {
            ChainState st = ising_ground_state(L, 2.0, 0.0);
            IndicatorPoint pt = majority_indicator(st, 8000, 92);
            INFO("L=", L);
            CHECK(pt.mean < prev - 2 * pt.stderr_);
            prev = pt.mean;
        }
    }
    SUBCASE("longitudinal field restores the symmetry") {
        // the estimator converges to the (positive) magnetization from
        // above, so the desk-scale signature is the widening gap over the
        // h_z = 0 curve, not a rise in absolute value
        double prev_gap = 0;
        for (int L : {8, 12, 16}) {
            IndicatorPoint with = majority_indicator(ising_ground_state(L, 2.0, 0.2), 8000, 93);
            IndicatorPoint without = majority_indicator(ising_ground_state(L, 2.0, 0.0), 8000, 94);
            const double gap = with.mean - without.mean;
            INFO("L=", L, " gap=", gap);
            CHECK(gap > prev_gap);
            prev_gap = gap;
        }
        // and it stays bounded away from zero where h_z = 0 keeps falling
        IndicatorPoint big = majority_indicator(ising_ground_state(16, 2.0, 0.2), 8000, 95);
        CHECK(big.mean > 0.35);
    }
    SUBCASE("vote is flip symmetric") {
        // per-sample score depends on the bitstring only through min(k, L-k)
        const int L = 10;
        for (uint32_t b : {0u, 5u, 1023u, 512u}) {
            const int k = __builtin_popcount(b);
            const int kf = __builtin_popcount(~b & 1023u);
            CHECK(std::abs(L - 2 * k) == std::abs(L - 2 * kf));
        }
    }
}

TEST_CASE("domain walls of periodic strings are even") {
    Rng rng(8, 0, 0);
    const int L = 14;
    for (int trial = 0; trial < 500; ++trial) {
        const uint32_t b = static_cast<uint32_t>(rng.below(1u << L));
        int walls = 0;
        for (int i = 0; i < L; ++i) walls += site(b, i, L) != site(b, i + 1, L);
        CHECK(walls % 2 == 0);
    }
}

TEST_CASE("three-to-one majority coarse graining") {
    CHECK(rg1d_majority({0, 0, 0, 1, 1, 1, 0, 0, 0}, 1) ==
          std::vector<uint8_t>{0, 1, 0});
    CHECK(rg1d_majority(std::vector<uint8_t>(27, 0), 3) == std::vector<uint8_t>{0});
    CHECK(rg1d_majority(std::vector<uint8_t>(27, 0), 2) == std::vector<uint8_t>(3, 0));
    CHECK_THROWS(rg1d_majority({0, 1}, 1));

    // sparse flips drain to zero density under repeated rounds
    Rng rng(12, 0, 0);
    const int len = 243;
    int survived = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<uint8_t> bits(len);
        for (auto& b : bits) b = rng.bernoulli(0.10);
        auto out = rg1d_majority(bits, 4);  // length 3
        for (auto b : out) survived += b;
    }
    CHECK(survived < 20);  // density driven far below the input 10%
}

TEST_CASE("cluster chain ground state") {
    SUBCASE("exact cluster point") {
        ChainState st = cluster_ground_state(8, 1.0);
        CHECK(st.energy == doctest::Approx(-8.0));
        // every stabilizer Z X Z has expectation +1
        for (int i = 0; i < 8; ++i) {
            double s = 0;
            for (uint32_t b = 0; b < 256; ++b) {
                const int sign = (site(b, i - 1, 8) ^ site(b, i + 1, 8)) ? -1 : 1;
                s += st.amp[b] * sign * st.amp[b ^ (1u << i)];
            }
            CHECK(s == doctest::Approx(1.0));
        }
    }
    SUBCASE("dense oracle at L = 8") {
        const int L = 8, dim = 1 << L;
        const double delta = 0.6;
        Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
        for (int b = 0; b < dim; ++b)
            for (int i = 0; i < L; ++i) {
                const int sign = (site(b, i - 1, L) ^ site(b, i + 1, L)) ? -1 : 1;
                h(b ^ (1 << i), b) += -(1 - delta) - delta * sign;
            }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
        ChainState st = cluster_ground_state(L, delta);
        CHECK(st.energy == doctest::Approx(es.eigenvalues()(0)).epsilon(1e-11));
    }
}

TEST_CASE("spt subsystem indicator") {
    SUBCASE("exact cluster state agrees perfectly") {
        IndicatorPoint pt = spt_subsystem_indicator(1.0, 12, 6, 200, 15);
        CHECK(pt.mean == 1.0);
    }
    SUBCASE("spt side beats the trivial side") {
        IndicatorPoint spt = spt_subsystem_indicator(0.8, 12, 6, 600, 16);
        IndicatorPoint triv = spt_subsystem_indicator(0.2, 12, 6, 600, 17);
        INFO("spt=", spt.mean, " triv=", triv.mean);
        CHECK(spt.mean > triv.mean + 2 * (spt.stderr_ + triv.stderr_));
        CHECK(spt.mean > 0.8);
    }
    CHECK_THROWS(spt_subsystem_indicator(0.5, 12, 5, 10, 1));   // odd L_sub
    CHECK_THROWS(spt_subsystem_indicator(0.5, 12, 12, 10, 1));  // L_sub = L
}
