#include <doctest.h>

#include <cmath>

#include "oneform/decode.hpp"
#include "oneform/qstate.hpp"
#include "oneform/strings.hpp"

using namespace oneform;

namespace {

double fidelity(const Statevector& a, const Statevector& b) {
    double s = 0;
    for (size_t i = 0; i < a.amp.size(); ++i) s += a.amp[i] * b.amp[i];
    return std::abs(s);
}

double z_string(const Statevector& psi, const EdgeSet& s) {
    uint64_t mask = 0;
    for (int e : s.edges()) mask |= 1ull << e;
    double acc = 0;
    for (size_t b = 0; b < psi.amp.size(); ++b)
        acc += (__builtin_popcountll(b & mask) & 1) ? -psi.amp[b] * psi.amp[b]
                                                    : psi.amp[b] * psi.amp[b];
    return acc;
}

double x_string(const Statevector& psi, const EdgeSet& s) {
    uint64_t mask = 0;
    for (int e : s.edges()) mask |= 1ull << e;
    double acc = 0;
    for (size_t b = 0; b < psi.amp.size(); ++b) acc += psi.amp[b] * psi.amp[b ^ mask];
    return acc;
}

} // namespace

TEST_CASE("product states") {
    Lattice lat = Lattice::torus(2, 2);
    Statevector zero = product_state(lat, 0);
    CHECK(zero.amp[0] == doctest::Approx(1.0));
    CHECK(zero.norm2() == doctest::Approx(1.0));

    Statevector plus = product_state(lat, M_PI / 2);
    for (double a : plus.amp) CHECK(a == doctest::Approx(std::pow(2.0, -4.0)));

    Statevector third = product_state(lat, M_PI / 3);
    const double c = std::cos(M_PI / 6), s = std::sin(M_PI / 6);
    CHECK(third.amp[0] == doctest::Approx(std::pow(c, 8)));
    CHECK(third.amp[0b11] == doctest::Approx(std::pow(c, 6) * s * s));

    CHECK_THROWS(product_state(Lattice::torus(4, 4), 0.3));  // 32 edges over cap
}

TEST_CASE("toric ground states") {
    Lattice lat = Lattice::torus(2, 2);
    for (int q = 0; q < 4; ++q) {
        const HomologyClass sec = HomologyClass::from_index(q);
        Statevector psi = toric_ground_state(lat, sec);
        CHECK(psi.norm2() == doctest::Approx(1.0));
        // stabilizer eigenvalues
        for (int p = 0; p < lat.n_plaquettes(); ++p)
            CHECK(z_string(psi, lat.plaquette_boundary(p)) == doctest::Approx(1.0));
        for (int v = 0; v < lat.n_vertices(); ++v)
            CHECK(x_string(psi, lat.vertex_star(v)) == doctest::Approx(1.0));
        // non-contractible Z loops read out the sector
        CHECK(z_string(psi, lat.cycles().cx) == doctest::Approx(sec.qx));
        CHECK(z_string(psi, lat.cycles().cy) == doctest::Approx(sec.qy));
    }
    // sectors are orthogonal
    Statevector a = toric_ground_state(lat, HomologyClass{1, 1});
    Statevector b = toric_ground_state(lat, HomologyClass{1, -1});
    CHECK(fidelity(a, b) == doctest::Approx(0.0));
}

TEST_CASE("deformed toric code states") {
    Lattice lat = Lattice::torus(2, 2);
    Statevector tc = toric_ground_state(lat, HomologyClass{1, 1});

    SUBCASE("identity deformation") {
        Statevector d = deformed_tc_state(lat, 0, 0);
        CHECK(fidelity(d, tc) == doctest::Approx(1.0));
    }

    SUBCASE("product limit on the unit circle") {
        // prod_e (1 + g_x X + g_z Z) = prod_e 2 P_chi with
        // |chi> = cos(t/2)|0> + sin(t/2)|1>, t = atan2(g_x, g_z)
        for (auto [gx, gz] :
             {std::pair{0.6, 0.8}, std::pair{1.0, 0.0}, std::pair{0.3, std::sqrt(1 - 0.09)}}) {
            Statevector d = deformed_tc_state(lat, gx, gz);
            Statevector prod = product_state(lat, std::atan2(gx, gz));
            CHECK(fidelity(d, prod) == doctest::Approx(1.0).epsilon(1e-10));
        }
    }

    SUBCASE("brute-force expansion oracle at (0.2, 0)") {
        const double g = 0.2;
        Statevector oracle{8, std::vector<double>(256, 0.0)};
        for (uint32_t t = 0; t < 256; ++t) {
            const double w = std::pow(g, __builtin_popcount(t));
            for (uint32_t b = 0; b < 256; ++b) oracle.amp[b] += w * tc.amp[b ^ t];
        }
        oracle.normalize();
        Statevector d = deformed_tc_state(lat, g, 0);
        CHECK(fidelity(d, oracle) == doctest::Approx(1.0).epsilon(1e-12));
        // fidelity with the undeformed state, frozen from the expansion oracle
        const double f_tc = fidelity(oracle, tc);
        CHECK(fidelity(d, tc) == doctest::Approx(f_tc).epsilon(1e-12));
        CHECK(f_tc == doctest::Approx(0.811216348529).epsilon(1e-10));
    }

    CHECK_THROWS(deformed_tc_state(lat, 0.9, 0.9));  // outside the disk
}

TEST_CASE("kappa tables by binning") {
    Lattice lat = Lattice::torus(2, 2);

    SUBCASE("stabilizer states concentrate") {
        KappaTable t = kappa_exact(toric_ground_state(lat, HomologyClass{1, 1}), lat);
        CHECK(t.k[0][0] == doctest::Approx(1.0));
        CHECK(sum_max_kappa(t) == doctest::Approx(1.0));
        KappaTable tz = kappa_exact(product_state(lat, 0), lat);
        CHECK(tz.k[0][0] == doctest::Approx(1.0));
    }

    SUBCASE("uniform state spreads evenly") {
        KappaTable t = kappa_exact(product_state(lat, M_PI / 2), lat);
        CHECK(t.total() == doctest::Approx(1.0));
        // 2^{N_p-1} = 8 achievable syndromes times 4 classes
        const double expect = 1.0 / 32.0;
        for (uint32_t m = 0; m < t.k.size(); ++m)
            for (int q = 0; q < 4; ++q) {
                if (__builtin_popcount(m) % 2 == 0)
                    CHECK(t.k[m][q] == doctest::Approx(expect).epsilon(1e-10));
                else
                    CHECK(t.k[m][q] == 0.0);
            }
        CHECK(sum_max_kappa(t) == doctest::Approx(0.25).epsilon(1e-10));
    }

    SUBCASE("score near the polarized end") {
        // 2x2 is a distance-2 lattice: parallel-edge pairs share a syndrome
        // with equal weight in two classes, so the score loses ~4p(1-p)^7
        const double v = sum_max_kappa(kappa_exact(product_state(lat, 0.05 * M_PI), lat));
        CHECK(v == doctest::Approx(0.975677974685).epsilon(1e-10));
        CHECK(v <= 1.0 + 1e-12);
        // away from the degenerate size the score sits above 0.99
        Lattice l33 = Lattice::torus(3, 3);
        const double v33 = sum_max_kappa(kappa_exact(product_state(l33, 0.05 * M_PI), l33));
        CHECK(v33 > 0.99);
        CHECK(v33 == doctest::Approx(0.999257654055).epsilon(1e-10));
    }

    SUBCASE("binning marginal equals the projector route") {
        for (auto [lx, ly] : {std::pair{2, 2}, std::pair{3, 2}}) {
            Lattice l2 = Lattice::torus(lx, ly);
            Statevector psi = product_state(l2, 0.23 * M_PI);
            KappaTable t = kappa_exact(psi, l2);
            // apply plaquette projectors operatorwise for every syndrome
            for (uint32_t m = 0; m < (1u << l2.n_plaquettes()); ++m) {
                if (__builtin_popcount(m) % 2) continue;
                Statevector proj = psi;
                for (int p = 0; p < l2.n_plaquettes(); ++p) {
                    const double mp = (m >> p) & 1 ? -1.0 : 1.0;
                    uint64_t mask = 0;
                    for (int e : l2.plaquette_edges(p)) mask |= 1ull << e;
                    for (size_t b = 0; b < proj.amp.size(); ++b) {
                        const double bp = (__builtin_popcountll(b & mask) & 1) ? -1.0 : 1.0;
                        proj.amp[b] = 0.5 * (1 + mp * bp) * proj.amp[b];
                    }
                }
                CHECK(t.syndrome_prob(m) == doctest::Approx(proj.norm2()).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("error sampling") {
    Lattice lat = Lattice::torus(16, 16);
    SUBCASE("degenerate p") {
        ErrorSample s0 = sample_errors(lat, 0.0, 1, 0);
        CHECK(s0.errors.empty());
        CHECK(s0.syndrome.trivial());
        CHECK(s0.cls == HomologyClass{1, 1});
        ErrorSample s1 = sample_errors(lat, 1.0, 1, 0);
        CHECK(s1.errors.count() == lat.n_edges());
        CHECK(s1.syndrome.trivial());
        // class = parity of the loop lengths
        CHECK(s1.cls.qx == (lat.lx() % 2 ? -1 : 1));
        CHECK(s1.cls.qy == (lat.ly() % 2 ? -1 : 1));
    }
    SUBCASE("binomial mean") {
        const double p = 0.10;
        const int n = 10000;
        double total = 0;
        for (int i = 0; i < n; ++i) total += sample_errors(lat, p, 99, i).errors.count();
        const double mean = total / n;
        const double sigma = std::sqrt(lat.n_edges() * p * (1 - p) / n);
        CHECK(std::abs(mean - p * lat.n_edges()) < 3 * sigma);
    }
    SUBCASE("syndrome parity is always even") {
        for (int i = 0; i < 200; ++i) {
            ErrorSample s = sample_errors(lat, 0.2, 5, i);
            CHECK(s.syndrome.defect_count() % 2 == 0);
        }
    }
    SUBCASE("counter rng is order independent") {
        ErrorSample a = sample_errors(lat, 0.13, 42, 17);
        for (int i = 0; i < 3; ++i) sample_errors(lat, 0.13, 42, i);
        ErrorSample b = sample_errors(lat, 0.13, 42, 17);
        CHECK(a.errors == b.errors);
    }
}

TEST_CASE("fm string order") {
    Lattice lat = Lattice::torus(2, 2);
    const EdgeSet loop = lat.cycles().cx;
    EdgeSet half(lat.n_edges());
    half.set(lat.east_edge(0, 0));

    Statevector tc = toric_ground_state(lat, HomologyClass{1, 1});
    auto v_tc = fm_string_order(tc, lat, half, loop);
    REQUIRE(v_tc.has_value());
    CHECK(*v_tc == doctest::Approx(0.0));

    auto v0 = fm_string_order(product_state(lat, 0), lat, half, loop);
    REQUIRE(v0.has_value());
    CHECK(*v0 == doctest::Approx(1.0));

    // undefined when the loop expectation vanishes: |+...+> has <Z loop> = 0
    auto vp = fm_string_order(product_state(lat, M_PI / 2), lat, half, loop);
    CHECK(!vp.has_value());
}

TEST_CASE("qec recovered expectation") {
    Lattice lat = Lattice::torus(2, 2);
    DecoderFn mwpm = [](const Lattice& l, const Syndrome& s) {
        return mwpm_decode(l, s).recovery;
    };
    EdgeSet empty(lat.n_edges());
    CHECK(qec_recovered_expectation(toric_ground_state(lat, HomologyClass{1, 1}), lat, mwpm,
                                    empty) == doctest::Approx(1.0));
    EdgeSet any(lat.n_edges());
    any.set(lat.east_edge(1, 1));
    any.set(lat.north_edge(0, 1));
    CHECK(qec_recovered_expectation(product_state(lat, 0), lat, mwpm, any) ==
          doctest::Approx(1.0));
}
