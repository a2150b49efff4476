#include "oneform/rbim.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "oneform/strings.hpp"

namespace oneform {

namespace {

// log-sum-exp accumulated in fixed-size chunks, chunk results combined
// pairwise; deterministic and stable over the huge dynamic range of Z
class LogSumAcc {
public:
    void add(double x) {
        if (x > cmax_) {
            csum_ = csum_ * std::exp(cmax_ - x) + 1.0;
            cmax_ = x;
        } else {
            csum_ += std::exp(x - cmax_);
        }
        if (++cn_ == kChunk) flush();
    }
    double result() {
        flush();
        while (parts_.size() > 1) {
            std::vector<std::pair<double, double>> next;
            for (size_t i = 0; i < parts_.size(); i += 2) {
                if (i + 1 == parts_.size()) { next.push_back(parts_[i]); break; }
                next.push_back(combine(parts_[i], parts_[i + 1]));
            }
            parts_.swap(next);
        }
        if (parts_.empty()) return -std::numeric_limits<double>::infinity();
        return parts_[0].first + std::log(parts_[0].second);
    }

private:
    static constexpr int kChunk = 1 << 14;
    static std::pair<double, double> combine(std::pair<double, double> a,
                                             std::pair<double, double> b) {
        if (a.first < b.first) std::swap(a, b);
        return {a.first, a.second + b.second * std::exp(b.first - a.first)};
    }
    void flush() {
        if (cn_ == 0) return;
        parts_.push_back({cmax_, csum_});
        cmax_ = -std::numeric_limits<double>::infinity();
        csum_ = 0;
        cn_ = 0;
    }
    double cmax_ = -std::numeric_limits<double>::infinity();
    double csum_ = 0;
    int cn_ = 0;
    std::vector<std::pair<double, double>> parts_;
};

struct Bond {
    int u, v;
    int sign;
};

std::vector<Bond> bonds_of(const RbimInstance& inst) {
    const Lattice& lat = *inst.lat;
    if (lat.kind() != Boundary::torus) throw std::invalid_argument("RBIM lives on the torus");
    std::vector<Bond> bonds(lat.n_edges());
    for (int e = 0; e < lat.n_edges(); ++e) {
        auto vv = lat.edge_vertices(e);
        bonds[e] = {vv[0], vv[1], inst.sign[e]};
    }
    return bonds;
}

} // namespace

double nishimori_coupling(double p) {
    if (p < 0 || p > 1) throw std::invalid_argument("p must be in [0,1]");
    if (p == 0) return std::numeric_limits<double>::infinity();
    if (p == 1) return -std::numeric_limits<double>::infinity();
    return -0.5 * std::log(p / (1 - p));
}

RbimInstance make_rbim(const Lattice& lat, double coupling, const EdgeSet& reference,
                       bool twist_x, bool twist_y) {
    RbimInstance inst;
    inst.lat = &lat;
    inst.coupling = coupling;
    inst.sign.assign(lat.n_edges(), 1);
    for (int e = 0; e < lat.n_edges(); ++e)
        if (reference.test(e)) inst.sign[e] = -1;
    // twist seams: antiferromagnetic couplings along one dual loop winding in
    // the named direction; placement is gauge-irrelevant
    if (twist_x)
        for (int x = 0; x < lat.lx(); ++x) inst.sign[lat.north_edge(x, lat.ly() - 1)] *= -1;
    if (twist_y)
        for (int y = 0; y < lat.ly(); ++y) inst.sign[lat.east_edge(lat.lx() - 1, y)] *= -1;
    return inst;
}

double log_partition_exact(const RbimInstance& inst) {
    const Lattice& lat = *inst.lat;
    const int nv = lat.n_vertices();
    if (nv > 25) throw std::invalid_argument("exact partition sum caps at N_v = 25");
    if (!std::isfinite(inst.coupling)) throw std::invalid_argument("infinite coupling: use ground_state_energy");
    auto bonds = bonds_of(inst);

    // incident bonds per vertex for Gray-code energy updates
    std::vector<std::vector<std::pair<int, int>>> inc(nv);  // (other vertex, sign)
    for (const auto& b : bonds) {
        inc[b.u].push_back({b.v, b.sign});
        inc[b.v].push_back({b.u, b.sign});
    }

    std::vector<int8_t> s(nv, 1);
    long long k = 0;  // sum_e sign_e s_u s_v, integer under J factored out
    for (const auto& b : bonds) k += b.sign;

    const double j = inst.coupling;
    LogSumAcc acc;
    acc.add(j * k);
    for (uint64_t i = 1; i < (uint64_t(1) << nv); ++i) {
        const int v = __builtin_ctzll(i);
        long long c = 0;
        for (auto [o, sg] : inc[v]) c += sg * s[v] * s[o];
        s[v] = -s[v];
        k -= 2 * c;
        acc.add(j * k);
    }
    return acc.result();
}

double ground_state_energy(const RbimInstance& inst) {
    const Lattice& lat = *inst.lat;
    const int nv = lat.n_vertices();
    if (nv > 25) throw std::invalid_argument("exhaustive ground state caps at N_v = 25");
    auto bonds = bonds_of(inst);
    std::vector<std::vector<std::pair<int, int>>> inc(nv);
    for (const auto& b : bonds) {
        inc[b.u].push_back({b.v, b.sign});
        inc[b.v].push_back({b.u, b.sign});
    }
    std::vector<int8_t> s(nv, 1);
    long long k = 0;
    for (const auto& b : bonds) k += b.sign;
    long long best = k;
    for (uint64_t i = 1; i < (uint64_t(1) << nv); ++i) {
        const int v = __builtin_ctzll(i);
        long long c = 0;
        for (auto [o, sg] : inc[v]) c += sg * s[v] * s[o];
        s[v] = -s[v];
        k -= 2 * c;
        if (k > best) best = k;
    }
    return -static_cast<double>(best);
}

double log_partition_transfer(const RbimInstance& inst) {
    const Lattice& lat = *inst.lat;
    const int w = lat.lx(), h = lat.ly();
    if (w > 12) throw std::invalid_argument("transfer width caps at Lx = 12");
    if (!std::isfinite(inst.coupling)) throw std::invalid_argument("infinite coupling: use ground_state_energy");
    const double j = inst.coupling;
    const size_t dim = size_t(1) << w;

    // M[s][s0]: weight of paths from anchor row state s0 to current row s;
    // Z = trace after Ly rows.
    std::vector<double> m(dim * dim, 0.0);
    for (size_t s = 0; s < dim; ++s) m[s * dim + s] = 1.0;
    double logscale = 0;

    std::vector<double> hrow(dim);
    for (int y = 0; y < h; ++y) {
        // horizontal bonds within row y
        for (size_t s = 0; s < dim; ++s) {
            double k = 0;
            for (int x = 0; x < w; ++x) {
                const int sx = (s >> x) & 1 ? -1 : 1;
                const int sx1 = (s >> ((x + 1) % w)) & 1 ? -1 : 1;
                k += inst.sign[lat.east_edge(x, y)] * sx * sx1;
            }
            hrow[s] = std::exp(j * k);
        }
        for (size_t s = 0; s < dim; ++s) {
            const double f = hrow[s];
            for (size_t s0 = 0; s0 < dim; ++s0) m[s * dim + s0] *= f;
        }
        // vertical bonds row y -> y+1, one site at a time
        for (int x = 0; x < w; ++x) {
            const double a = std::exp(j * inst.sign[lat.north_edge(x, y)]);
            const double b = 1.0 / a;
            const size_t bit = size_t(1) << x;
            for (size_t s = 0; s < dim; ++s) {
                if (s & bit) continue;
                double* r0 = &m[s * dim];
                double* r1 = &m[(s | bit) * dim];
                for (size_t s0 = 0; s0 < dim; ++s0) {
                    const double v0 = r0[s0], v1 = r1[s0];
                    r0[s0] = a * v0 + b * v1;
                    r1[s0] = b * v0 + a * v1;
                }
            }
        }
        // rescale to keep entries bounded
        double mx = 0;
        for (double v : m) mx = std::max(mx, v);
        if (mx > 0) {
            const double inv = 1.0 / mx;
            for (double& v : m) v *= inv;
            logscale += std::log(mx);
        }
    }
    double tr = 0;
    for (size_t s = 0; s < dim; ++s) tr += m[s * dim + s];
    return logscale + std::log(tr);
}

double log_partition(const RbimInstance& inst) {
    if (inst.lat->n_vertices() <= 20) return log_partition_exact(inst);
    return log_partition_transfer(inst);
}

IdentityReport ising_twist_identities(const Lattice& lat, double g_x) {
    if (lat.n_edges() > 20) throw std::invalid_argument("identity check is exact-mode only");
    if (g_x <= 0 || g_x >= 1) throw std::invalid_argument("need 0 < g_x < 1");

    const double j = -0.5 * std::log(g_x);
    const double a = 2 * g_x / (1 + g_x * g_x);
    const double jt = -0.5 * std::log(a);
    const int np = lat.n_plaquettes();
    const double ne = lat.n_edges();
    const double log_prefactor =
        std::log(2.0) + (ne / 2) * std::log(2.0 * (1 + g_x * g_x) / g_x);

    // dual loops used as class shifts and as twist seams
    const EdgeSet& dual_along_x = lat.cycles().dual_y;  // winds in x
    const EdgeSet& dual_along_y = lat.cycles().dual_x;  // winds in y
    EdgeSet dual_both = dual_along_x ^ dual_along_y;
    const EdgeSet none(lat.n_edges());

    struct Variant {
        const char* name;
        const EdgeSet* shift;
    };
    const Variant variants[] = {{"square", &none},
                                {"cross-x", &dual_along_x},
                                {"cross-y", &dual_along_y},
                                {"cross-xy", &dual_both}};

    // enumerate every sector once: even-parity syndromes times 4 classes
    std::vector<LogSumAcc> lhs(4);
    for (uint32_t m = 0; m < (1u << np); ++m) {
        if (__builtin_popcount(m) & 1) continue;
        Syndrome syn;
        syn.neg.assign(np, 0);
        for (int p = 0; p < np; ++p) syn.neg[p] = (m >> p) & 1;
        EdgeSet base = reference_chain(lat, syn);
        for (int q = 0; q < 4; ++q) {
            EdgeSet s = base;
            if (q & 2) s ^= lat.cycles().dual_x;
            if (q & 1) s ^= lat.cycles().dual_y;
            const double z = log_partition_exact(make_rbim(lat, j, s));
            for (int v = 0; v < 4; ++v) {
                EdgeSet shifted = s ^ *variants[v].shift;
                const double z2 = log_partition_exact(make_rbim(lat, j, shifted));
                lhs[v].add(z + z2);
            }
        }
    }

    IdentityReport report;
    report.g_x = g_x;
    for (int v = 0; v < 4; ++v) {
        const double rhs =
            log_prefactor + log_partition_exact(make_rbim(lat, jt, *variants[v].shift));
        IdentityCheck c;
        c.name = variants[v].name;
        c.lhs_log = lhs[v].result();
        c.rhs_log = rhs;
        c.rel_err = std::abs(std::expm1(c.lhs_log - c.rhs_log));
        report.max_rel_err = std::max(report.max_rel_err, c.rel_err);
        report.checks.push_back(c);
    }
    return report;
}

} // namespace oneform
