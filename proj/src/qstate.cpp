#include "oneform/qstate.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace oneform {

namespace {

void require_exact(const Lattice& lat) {
    if (lat.n_edges() > kExactEdgeCap)
        throw std::invalid_argument("exact mode needs N_e <= " + std::to_string(kExactEdgeCap));
}

// per-edge lookup tables for binning basis states
struct BinTables {
    std::vector<uint32_t> plaq_flip;  // syndrome mask toggled by edge e
    std::vector<uint8_t> class_flip;  // bit0: crosses C_x, bit1: crosses C_y

    explicit BinTables(const Lattice& lat) {
        plaq_flip.assign(lat.n_edges(), 0);
        class_flip.assign(lat.n_edges(), 0);
        for (int e = 0; e < lat.n_edges(); ++e) {
            for (int p : lat.edge_plaquettes(e))
                if (p >= 0) plaq_flip[e] ^= 1u << p;
            if (lat.kind() == Boundary::torus) {
                if (lat.cycles().cx.test(e)) class_flip[e] |= 1;
                if (lat.cycles().cy.test(e)) class_flip[e] |= 2;
            }
        }
    }
};

} // namespace

double Statevector::norm2() const {
    double s = 0;
    for (double a : amp) s += a * a;
    return s;
}

void Statevector::normalize() {
    double n = std::sqrt(norm2());
    if (n == 0) throw std::runtime_error("null statevector");
    for (double& a : amp) a /= n;
}

Statevector product_state(const Lattice& lat, double theta) {
    require_exact(lat);
    const int n = lat.n_edges();
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    std::vector<double> byk(n + 1);
    for (int k = 0; k <= n; ++k) byk[k] = std::pow(c, n - k) * std::pow(s, k);
    Statevector psi{n, std::vector<double>(size_t(1) << n)};
    for (size_t b = 0; b < psi.amp.size(); ++b)
        psi.amp[b] = byk[__builtin_popcountll(b)];
    return psi;
}

Statevector toric_ground_state(const Lattice& lat, HomologyClass sector) {
    require_exact(lat);
    if (lat.kind() != Boundary::torus) throw std::invalid_argument("toric ground state: torus only");
    const int n = lat.n_edges();
    const int nv = lat.n_vertices();

    // star group: generated by all vertex stars, rank N_v - 1
    EdgeSet d(n);
    if (sector.qx < 0) d ^= lat.cycles().dual_x;
    if (sector.qy < 0) d ^= lat.cycles().dual_y;
    uint64_t base = 0;
    for (int e : d.edges()) base |= 1ull << e;

    std::vector<uint64_t> stars(nv, 0);
    for (int v = 0; v < nv; ++v)
        for (int e : lat.vertex_star_edges(v)) stars[v] ^= 1ull << e;

    Statevector psi{n, std::vector<double>(size_t(1) << n, 0.0)};
    const int ng = nv - 1;  // product of all stars is the identity
    const double a = 1.0 / std::sqrt(double(size_t(1) << ng));
    uint64_t cur = base;
    psi.amp[cur] = a;
    for (uint64_t i = 1; i < (uint64_t(1) << ng); ++i) {
        cur ^= stars[__builtin_ctzll(i)];  // Gray code walk over the group
        psi.amp[cur] = a;
    }
    return psi;
}

Statevector deformed_tc_state(const Lattice& lat, double gx, double gz) {
    require_exact(lat);
    if (gx < 0 || gz < 0 || gx * gx + gz * gz > 1 + 1e-12)
        throw std::invalid_argument("deformed state needs g_x, g_z >= 0 and g_x^2+g_z^2 <= 1");
    Statevector psi = toric_ground_state(lat, HomologyClass{1, 1});
    const size_t dim = psi.amp.size();
    // apply (1 + g_x X_e + g_z Z_e) = [[1+g_z, g_x], [g_x, 1-g_z]] per edge
    for (int e = 0; e < lat.n_edges(); ++e) {
        const uint64_t bit = 1ull << e;
        for (size_t b = 0; b < dim; ++b) {
            if (b & bit) continue;
            const double a0 = psi.amp[b], a1 = psi.amp[b | bit];
            psi.amp[b] = (1 + gz) * a0 + gx * a1;
            psi.amp[b | bit] = gx * a0 + (1 - gz) * a1;
        }
    }
    psi.normalize();
    // fix global sign on the all-zeros amplitude (fall back to the first
    // nonvanishing one)
    for (double a : psi.amp) {
        if (std::abs(a) > 1e-14) {
            if (a < 0)
                for (double& x : psi.amp) x = -x;
            break;
        }
    }
    return psi;
}

KappaTable kappa_exact(const Statevector& psi, const Lattice& lat) {
    require_exact(lat);
    if (lat.kind() != Boundary::torus) throw std::invalid_argument("kappa_exact: torus only");
    const int n = lat.n_edges();
    if ((size_t(1) << n) != psi.amp.size()) throw std::invalid_argument("state/lattice size mismatch");
    BinTables bt(lat);

    KappaTable table{lat.n_plaquettes(),
                     std::vector<std::array<double, 4>>(size_t(1) << lat.n_plaquettes(),
                                                        {0, 0, 0, 0})};
    uint32_t m = 0;
    uint8_t cf = 0;
    uint64_t b = 0;
    table.k[0][0] += psi.amp[0] * psi.amp[0];
    for (uint64_t i = 1; i < (uint64_t(1) << n); ++i) {
        const int e = __builtin_ctzll(i);
        b ^= 1ull << e;
        m ^= bt.plaq_flip[e];
        cf ^= bt.class_flip[e];
        // cf bit set = odd crossings = eigenvalue -1; index order matches
        // HomologyClass::index(): bit1 <-> qx, bit0 <-> qy
        const int q = ((cf & 1) << 1) | ((cf >> 1) & 1);
        table.k[m][q] += psi.amp[b] * psi.amp[b];
    }
    return table;
}

double KappaTable::total() const {
    double s = 0;
    for (const auto& row : k)
        for (double v : row) s += v;
    return s;
}

double KappaTable::syndrome_prob(uint32_t m) const {
    const auto& row = k[m];
    return row[0] + row[1] + row[2] + row[3];
}

double sum_max_kappa(const KappaTable& table) {
    double s = 0;
    for (const auto& row : table.k)
        s += std::max(std::max(row[0], row[1]), std::max(row[2], row[3]));
    return s;
}

ErrorSample sample_errors(const Lattice& lat, double p, Rng& rng) {
    if (p < 0 || p > 1) throw std::invalid_argument("p must be in [0,1]");
    ErrorSample out;
    out.errors = EdgeSet(lat.n_edges());
    for (int e = 0; e < lat.n_edges(); ++e)
        if (rng.bernoulli(p)) out.errors.set(e);
    out.syndrome = lat.chain_syndrome(out.errors);
    if (lat.kind() == Boundary::torus) out.cls = lat.chain_class(out.errors);
    return out;
}

ErrorSample sample_errors(const Lattice& lat, double p, uint64_t seed, uint64_t index) {
    Rng rng(seed, /*stream=*/0, index);
    return sample_errors(lat, p, rng);
}

std::optional<double> fm_string_order(const Statevector& psi, const Lattice& lat,
                                      const EdgeSet& half_path, const EdgeSet& full_loop) {
    require_exact(lat);
    uint64_t hmask = 0, lmask = 0;
    for (int e : half_path.edges()) hmask |= 1ull << e;
    for (int e : full_loop.edges()) lmask |= 1ull << e;
    double num = 0, den = 0;
    for (size_t b = 0; b < psi.amp.size(); ++b) {
        const double w = psi.amp[b] * psi.amp[b];
        num += (__builtin_popcountll(b & hmask) & 1) ? -w : w;
        den += (__builtin_popcountll(b & lmask) & 1) ? -w : w;
    }
    // exact cancellations land at floating noise; treat those as undefined
    if (den <= 1e-12) return std::nullopt;
    return num / std::sqrt(den);
}

double qec_recovered_expectation(const Statevector& psi, const Lattice& lat,
                                 const DecoderFn& decoder, const EdgeSet& observable) {
    require_exact(lat);
    BinTables bt(lat);
    uint64_t omask = 0;
    for (int e : observable.edges()) omask |= 1ull << e;

    // recovery mask per syndrome, decoded on first encounter
    std::map<uint32_t, uint64_t> rec;
    auto recovery_mask = [&](uint32_t m) -> uint64_t {
        auto it = rec.find(m);
        if (it != rec.end()) return it->second;
        Syndrome syn;
        syn.neg.assign(lat.n_plaquettes(), 0);
        for (int p = 0; p < lat.n_plaquettes(); ++p) syn.neg[p] = (m >> p) & 1;
        uint64_t rm = 0;
        for (int e : decoder(lat, syn).edges()) rm |= 1ull << e;
        rec.emplace(m, rm);
        return rm;
    };

    double acc = 0;
    uint32_t m = 0;
    uint64_t b = 0;
    const int n = lat.n_edges();
    for (uint64_t i = 0; i < (uint64_t(1) << n); ++i) {
        if (i) {
            const int e = __builtin_ctzll(i);
            b ^= 1ull << e;
            m ^= bt.plaq_flip[e];
        }
        const double w = psi.amp[b] * psi.amp[b];
        if (w == 0) continue;
        const uint64_t corrected = b ^ recovery_mask(m);
        acc += (__builtin_popcountll(corrected & omask) & 1) ? -w : w;
    }
    return acc;
}

} // namespace oneform
