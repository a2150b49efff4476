#include "oneform/chain1d.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "oneform/rng.hpp"

namespace oneform {

namespace {

constexpr int kChainCap = 16;

// QL with implicit shifts on a symmetric tridiagonal matrix; rotations are
// accumulated into `vecs` (rows = basis index, cols = eigenvector index).
void tridiag_eigen(std::vector<double>& diag, std::vector<double>& off,
                   std::vector<std::vector<double>>& vecs) {
    const int n = static_cast<int>(diag.size());
    off.push_back(0.0);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(diag[m]) + std::abs(diag[m + 1]);
                if (std::abs(off[m]) <= 1e-300 + 1e-15 * dd) break;
            }
            if (m != l) {
                if (iter++ == 60) throw std::runtime_error("tridiagonal QL failed to converge");
                double g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
                double r = std::hypot(g, 1.0);
                g = diag[m] - diag[l] + off[l] / (g + (g >= 0 ? r : -r));
                double s = 1.0, c = 1.0, p = 0.0;
                int i = m - 1;
                for (; i >= l; --i) {
                    double f = s * off[i], b = c * off[i];
                    r = std::hypot(f, g);
                    off[i + 1] = r;
                    if (r == 0.0) {
                        diag[i + 1] -= p;
                        off[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = diag[i + 1] - p;
                    r = (diag[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    diag[i + 1] = g + p;
                    g = c * r - b;
                    for (auto& row : vecs) {
                        const double vf = row[i + 1];
                        row[i + 1] = s * row[i] + c * vf;
                        row[i] = c * row[i] - s * vf;
                    }
                }
                if (r == 0.0 && i >= l) continue;
                diag[l] -= p;
                off[l] = g;
                off[m] = 0.0;
            }
        } while (m != l);
    }
    off.pop_back();
}

// Lanczos with full reorthogonalization; returns the lowest eigenpair.
// `symmetrize` (optional) is applied to every Krylov vector to pin a
// degenerate ground space to a chosen sector.
std::pair<double, std::vector<double>> lanczos_ground(
    size_t dim, const std::function<void(const std::vector<double>&, std::vector<double>&)>& apply,
    const std::function<void(std::vector<double>&)>& symmetrize, int max_iter) {
    std::vector<std::vector<double>> basis;
    std::vector<double> alpha, beta;

    std::vector<double> v(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
    if (symmetrize) symmetrize(v);
    {
        double n2 = 0;
        for (double x : v) n2 += x * x;
        const double inv = 1.0 / std::sqrt(n2);
        for (double& x : v) x *= inv;
    }

    std::vector<double> w(dim);
    double prev_e = 1e300;
    for (int k = 0; k < max_iter; ++k) {
        basis.push_back(v);
        apply(v, w);
        double a = 0;
        for (size_t i = 0; i < dim; ++i) a += v[i] * w[i];
        alpha.push_back(a);
        for (size_t i = 0; i < dim; ++i) w[i] -= a * v[i];
        if (k > 0)
            for (size_t i = 0; i < dim; ++i) w[i] -= beta[k - 1] * basis[k - 1][i];
        // full reorthogonalization
        for (const auto& b : basis) {
            double d = 0;
            for (size_t i = 0; i < dim; ++i) d += b[i] * w[i];
            for (size_t i = 0; i < dim; ++i) w[i] -= d * b[i];
        }
        if (symmetrize) symmetrize(w);
        double n2 = 0;
        for (double x : w) n2 += x * x;
        const double bnorm = std::sqrt(n2);

        // current Ritz value
        std::vector<double> d = alpha, e = beta;
        std::vector<std::vector<double>> dummy;
        tridiag_eigen(d, e, dummy);
        const double emin = *std::min_element(d.begin(), d.end());
        const bool stalled = bnorm < 1e-13;
        const bool converged = std::abs(emin - prev_e) < 1e-14 * (1 + std::abs(emin));
        prev_e = emin;
        if (stalled || converged || k + 1 == max_iter || basis.size() == dim) break;

        beta.push_back(bnorm);
        const double inv = 1.0 / bnorm;
        for (size_t i = 0; i < dim; ++i) v[i] = w[i] * inv;
    }

    // lowest eigenpair of the final tridiagonal
    const int m = static_cast<int>(alpha.size());
    std::vector<double> d = alpha, e = beta;
    // build full eigenvector matrix of T: start from identity rows
    std::vector<std::vector<double>> tvecs(m, std::vector<double>(m, 0.0));
    for (int i = 0; i < m; ++i) tvecs[i][i] = 1.0;
    tridiag_eigen(d, e, tvecs);
    int best = 0;
    for (int i = 1; i < m; ++i)
        if (d[i] < d[best]) best = i;

    std::vector<double> ground(dim, 0.0);
    for (int k = 0; k < m; ++k) {
        const double c = tvecs[k][best];
        for (size_t i = 0; i < dim; ++i) ground[i] += c * basis[k][i];
    }
    double n2 = 0;
    for (double x : ground) n2 += x * x;
    const double inv = 1.0 / std::sqrt(n2);
    for (double& x : ground) x *= inv;
    return {d[best], ground};
}

int site_bit(uint64_t b, int i, int L) { return (b >> (((i % L) + L) % L)) & 1; }

// cumulative |amp|^2 table for Z-basis sampling
std::vector<double> cumulative(const std::vector<double>& amp) {
    std::vector<double> c(amp.size());
    double run = 0;
    for (size_t i = 0; i < amp.size(); ++i) {
        run += amp[i] * amp[i];
        c[i] = run;
    }
    return c;
}

uint64_t draw_basis(const std::vector<double>& cum, Rng& rng) {
    const double u = rng.uniform() * cum.back();
    return std::lower_bound(cum.begin(), cum.end(), u) - cum.begin();
}

} // namespace

double criterion_1d(double theta, int L) {
    if (L < 2 || L > 60 || L % 2 != 0) throw std::invalid_argument("criterion_1d: even L in [2,60]");
    if (theta < 0 || theta > M_PI / 2 + 1e-12) throw std::invalid_argument("theta in [0, pi/2]");
    const long double c2 = std::pow(std::cos(static_cast<long double>(theta) / 2), 2.0L);
    const long double s2 = std::pow(std::sin(static_cast<long double>(theta) / 2), 2.0L);
    long double term = std::pow(c2, static_cast<long double>(L));  // i = 0
    if (theta == 0) return 1.0;
    const long double ratio = s2 / c2;
    long double sum = 0;
    for (int i = 0; i <= L / 2; ++i) {
        sum += (i == L / 2) ? term / 2 : term;
        term *= ratio * static_cast<long double>(L - i) / static_cast<long double>(i + 1);
    }
    return static_cast<double>(sum);
}

ChainState ising_ground_state(int L, double hx, double hz) {
    if (L < 2 || L > kChainCap) throw std::invalid_argument("ising chain: L in [2,16]");
    const size_t dim = size_t(1) << L;

    // diagonal part: -sum Z Z - h_z sum Z
    std::vector<double> diag(dim);
    for (size_t b = 0; b < dim; ++b) {
        int zz = 0;
        for (int i = 0; i < L; ++i) {
            const int zi = site_bit(b, i, L) ? -1 : 1;
            const int zj = site_bit(b, i + 1, L) ? -1 : 1;
            zz += zi * zj;
        }
        const int ztot = L - 2 * __builtin_popcountll(b);
        diag[b] = -zz - hz * ztot;
    }

    auto apply = [&](const std::vector<double>& x, std::vector<double>& y) {
        for (size_t b = 0; b < dim; ++b) y[b] = diag[b] * x[b];
        if (hx != 0)
            for (size_t b = 0; b < dim; ++b) {
                const double xb = x[b];
                for (int i = 0; i < L; ++i) y[b ^ (size_t(1) << i)] -= hx * xb;
            }
    };

    std::function<void(std::vector<double>&)> symm;
    if (hz == 0) {
        const size_t full = dim - 1;
        symm = [full](std::vector<double>& x) {
            for (size_t b = 0; b < x.size(); ++b) {
                const size_t fb = b ^ full;
                if (b < fb) {
                    const double m = 0.5 * (x[b] + x[fb]);
                    x[b] = x[fb] = m;
                }
            }
        };
    }

    auto [e, vec] = lanczos_ground(dim, apply, symm, 260);
    ChainState st;
    st.length = L;
    st.amp = std::move(vec);
    st.energy = e;
    return st;
}

IndicatorPoint majority_indicator(const ChainState& state, int n_samples, uint64_t seed) {
    const int L = state.length;
    const auto cum = cumulative(state.amp);
    double sum = 0, sumsq = 0;
    for (int i = 0; i < n_samples; ++i) {
        Rng rng(seed, 1, i);
        const uint64_t b = draw_basis(cum, rng);
        const int k = __builtin_popcountll(b);
        const double z = static_cast<double>(std::abs(L - 2 * k)) / L;
        sum += z;
        sumsq += z * z;
    }
    IndicatorPoint pt;
    pt.n_samples = n_samples;
    pt.mean = sum / n_samples;
    const double var = std::max(0.0, sumsq / n_samples - pt.mean * pt.mean);
    pt.stderr_ = std::sqrt(var / n_samples);
    return pt;
}

std::vector<uint8_t> rg1d_majority(const std::vector<uint8_t>& bits, int rounds) {
    std::vector<uint8_t> cur = bits;
    for (int r = 0; r < rounds; ++r) {
        if (cur.size() % 3 != 0) throw std::invalid_argument("length must divide 3^rounds");
        std::vector<uint8_t> next(cur.size() / 3);
        for (size_t i = 0; i < next.size(); ++i) {
            const int c = cur[3 * i] + cur[3 * i + 1] + cur[3 * i + 2];
            next[i] = c >= 2;
        }
        cur.swap(next);
    }
    return cur;
}

ChainState cluster_ground_state(int L, double delta) {
    if (L < 4 || L > kChainCap || L % 2 != 0)
        throw std::invalid_argument("cluster chain: even L in [4,16]");
    if (delta < 0 || delta > 1) throw std::invalid_argument("delta in [0,1]");
    const size_t dim = size_t(1) << L;

    auto apply = [&](const std::vector<double>& x, std::vector<double>& y) {
        std::fill(y.begin(), y.end(), 0.0);
        for (size_t b = 0; b < dim; ++b) {
            const double xb = x[b];
            if (xb == 0) continue;
            for (int i = 0; i < L; ++i) {
                const int zz = site_bit(b, i - 1, L) ^ site_bit(b, i + 1, L);
                const double coeff = -(1 - delta) - delta * (zz ? -1.0 : 1.0);
                y[b ^ (size_t(1) << i)] += coeff * xb;
            }
        }
    };

    // pin the Z2 x Z2 sector: project onto +1 of both sublattice X products
    uint64_t even_mask = 0, odd_mask = 0;
    for (int i = 0; i < L; i += 2) even_mask |= uint64_t(1) << i;
    for (int i = 1; i < L; i += 2) odd_mask |= uint64_t(1) << i;
    auto symm = [even_mask, odd_mask](std::vector<double>& x) {
        const uint64_t dim_ = x.size();
        for (uint64_t b = 0; b < dim_; ++b) {
            const uint64_t be = b ^ even_mask;
            if (b < be) {
                const double m = 0.5 * (x[b] + x[be]);
                x[b] = x[be] = m;
            }
        }
        for (uint64_t b = 0; b < dim_; ++b) {
            const uint64_t bo = b ^ odd_mask;
            if (b < bo) {
                const double m = 0.5 * (x[b] + x[bo]);
                x[b] = x[bo] = m;
            }
        }
    };

    auto [e, vec] = lanczos_ground(dim, apply, symm, 260);
    ChainState st;
    st.length = L;
    st.amp = std::move(vec);
    st.energy = e;
    return st;
}

namespace {

// stabilizer outcomes s_i of Z_{i-1} X_i Z_{i+1} drawn by sequential
// projective measurement
std::vector<int8_t> sample_stabilizers(const ChainState& state, Rng& rng,
                                       std::vector<double>& work) {
    const int L = state.length;
    const size_t dim = size_t(1) << L;
    work = state.amp;
    std::vector<int8_t> out(L);
    for (int i = 0; i < L; ++i) {
        const size_t bit = size_t(1) << i;
        // weight of the +1 outcome
        double wplus = 0;
        for (size_t b = 0; b < dim; ++b) {
            if (b & bit) continue;
            const int sign = (site_bit(b, i - 1, L) ^ site_bit(b, i + 1, L)) ? -1 : 1;
            const double p0 = 0.5 * (work[b] + sign * work[b | bit]);
            const double p1 = 0.5 * (work[b | bit] + sign * work[b]);
            wplus += p0 * p0 + p1 * p1;
        }
        double norm = 0;
        for (size_t b = 0; b < dim; ++b) norm += work[b] * work[b];
        const double prob_plus = std::min(1.0, std::max(0.0, wplus / norm));
        const int s = rng.uniform() < prob_plus ? 1 : -1;
        out[i] = static_cast<int8_t>(s);
        for (size_t b = 0; b < dim; ++b) {
            if (b & bit) continue;
            const int sign = (site_bit(b, i - 1, L) ^ site_bit(b, i + 1, L)) ? -1 : 1;
            const double a0 = work[b], a1 = work[b | bit];
            work[b] = 0.5 * (a0 + s * sign * a1);
            work[b | bit] = 0.5 * (a1 + s * sign * a0);
        }
    }
    return out;
}

// one sublattice worth of pairing bookkeeping; slots are string sites,
// boundaries carry the charges
struct SublatticePairing {
    int n_slots = 0;
    std::vector<uint8_t> charge;  // per boundary
    std::vector<uint8_t> flips;   // chosen flip class, per slot
};

// flip class from charges: f[k+1] = f[k] xor charge(k); pick the lighter of
// the two classes, ties to the one with slot 0 unflipped
std::vector<uint8_t> choose_flips(const std::vector<uint8_t>& charge) {
    const int n = static_cast<int>(charge.size());
    std::vector<uint8_t> f(n, 0);
    for (int k = 0; k + 1 < n; ++k) f[k + 1] = f[k] ^ charge[k];
    int w = 0;
    for (auto v : f) w += v;
    if (2 * w > n)
        for (auto& v : f) v ^= 1;
    return f;
}

} // namespace

IndicatorPoint spt_subsystem_indicator(double delta, int L_total, int L_sub,
                                       int n_samples, uint64_t seed) {
    if (L_sub % 2 != 0 || L_sub < 4 || L_sub >= L_total)
        throw std::invalid_argument("need even 4 <= L_sub < L_total");
    const ChainState state = cluster_ground_state(L_total, delta);
    const int L = L_total;
    const int half = L / 2;

    std::vector<double> work;
    double agree_sum = 0;
    for (int sample = 0; sample < n_samples; ++sample) {
        Rng rng(seed, 2, sample);
        const std::vector<int8_t> s = sample_stabilizers(state, rng, work);

        bool all_agree = true;
        // off = 0: strings on even sites, charges on odd sites; off = 1 swaps
        for (int off = 0; off < 2 && all_agree; ++off) {
            // boundary k sits at site (2k + 1 + off) mod L
            std::vector<uint8_t> charge(half, 0);
            int parity = 0;
            for (int k = 0; k < half; ++k) {
                charge[k] = s[(2 * k + 1 + off) % L] < 0;
                parity ^= charge[k];
            }
            // the sampled state sits in the +1 sector of both sublattice
            // X products, so the charge count per sublattice is even
            if (parity) throw std::logic_error("odd charge parity on a sublattice");
            const std::vector<uint8_t> f1 = choose_flips(charge);

            // strings of the first pairing: maximal runs of flipped slots;
            // keep those whose two end charges both lie in A
            std::vector<uint8_t> kept(half, 0);
            std::vector<uint8_t> charge_left(charge);  // charges kept in A after strip
            for (int k = 0; k < half; ++k) {
                const int site = (2 * k + 1 + off) % L;
                if (charge[k] && site >= L_sub) charge_left[k] = 0;  // outside A
            }
            {
                // find runs over the ring
                int start = -1;
                // rotate to a zero slot to avoid splitting a wrapped run
                int z = -1;
                for (int k = 0; k < half; ++k)
                    if (!f1[k]) { z = k; break; }
                if (z >= 0) {
                    for (int t = 0; t < half; ++t) {
                        const int k = (z + t) % half;
                        if (f1[k]) {
                            if (start < 0) start = k;
                        } else if (start >= 0) {
                            // run covers slots start..k-1 (cyclic); end charges at
                            // boundaries start-1 and k-1
                            const int ba = ((start - 1) % half + half) % half;
                            const int bb = ((k - 1) % half + half) % half;
                            const int site_a = (2 * ba + 1 + off) % L;
                            const int site_b = (2 * bb + 1 + off) % L;
                            const bool in_a = site_a < L_sub && site_b < L_sub;
                            if (in_a) {
                                for (int q = start; q != k; q = (q + 1) % half) kept[q] = 1;
                            } else if ((site_a < L_sub) != (site_b < L_sub)) {
                                // straddling: strip the A-side charge
                                if (site_a < L_sub) charge_left[ba] = 0;
                                else charge_left[bb] = 0;
                            }
                            start = -1;
                        }
                    }
                    if (start >= 0) {
                        const int k = z;
                        const int ba = ((start - 1) % half + half) % half;
                        const int bb = ((k - 1) % half + half) % half;
                        const int site_a = (2 * ba + 1 + off) % L;
                        const int site_b = (2 * bb + 1 + off) % L;
                        if (site_a < L_sub && site_b < L_sub) {
                            for (int q = start; q != k; q = (q + 1) % half) kept[q] = 1;
                        } else if ((site_a < L_sub) != (site_b < L_sub)) {
                            if (site_a < L_sub) charge_left[ba] = 0;
                            else charge_left[bb] = 0;
                        }
                    }
                } else if (f1[0]) {
                    // fully flipped ring: no endpoints, nothing kept
                }
            }

            // fold A: slots with site(2k+off) < L_sub, glue last to first.
            // Remaining charge at folded boundary k for k < half_A - 1 maps from
            // the original boundary; the glue boundary picks up whichever edge
            // charge survives there.
            const int half_a = L_sub / 2;
            std::vector<uint8_t> charge2(half_a, 0);
            for (int k = 0; k < half; ++k) {
                if (!charge_left[k]) continue;
                const int site = (2 * k + 1 + off) % L;
                if (site >= L_sub) continue;  // stripped already, keep tidy
                const int fk = (site == 0) ? half_a - 1 : (site - 1 - off) / 2;
                charge2[std::min(fk, half_a - 1)] ^= 1;
            }
            const std::vector<uint8_t> f2 = choose_flips(charge2);

            for (int k = 0; k < half_a && all_agree; ++k)
                if (kept[k] != f2[k]) all_agree = false;
        }
        agree_sum += all_agree ? 1.0 : 0.0;
    }

    IndicatorPoint pt;
    pt.n_samples = n_samples;
    pt.mean = agree_sum / n_samples;
    pt.stderr_ = std::sqrt(std::max(0.0, pt.mean * (1 - pt.mean)) / n_samples);
    return pt;
}

} // namespace oneform
