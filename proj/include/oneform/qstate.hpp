#pragma once

#include <functional>
#include <optional>

#include "oneform/lattice.hpp"
#include "oneform/rng.hpp"

namespace oneform {

// Exact-mode cap: 2^20 amplitudes is the largest statevector we build.
inline constexpr int kExactEdgeCap = 20;

// Real amplitudes suffice for every state family used here.
struct Statevector {
    int n_qubits = 0;
    std::vector<double> amp;

    double norm2() const;
    void normalize();
};

// kappa[m][q] with m the defect bitmask over plaquettes and q the class
// index in tie-break order.  Rows for unreachable (odd-parity) m stay zero.
struct KappaTable {
    int n_plaquettes = 0;
    std::vector<std::array<double, 4>> k;  // size 2^n_plaquettes

    double total() const;
    double syndrome_prob(uint32_t m) const;  // marginal over q
};

struct ErrorSample {
    EdgeSet errors;
    Syndrome syndrome;
    HomologyClass cls;
};

// |theta>^(x) N_e with |theta> = cos(theta/2)|0> + sin(theta/2)|1>
Statevector product_state(const Lattice& lat, double theta);

// Simultaneous +1 eigenstate of all B_p and A_v in the requested
// (q_x, q_y) sector of the non-contractible Z loops.
Statevector toric_ground_state(const Lattice& lat, HomologyClass sector);

// prod_e (1 + g_x X_e + g_z Z_e) |TC_(1,1)>, normalized, all-zeros
// amplitude made nonnegative.
Statevector deformed_tc_state(const Lattice& lat, double gx, double gz);

// kappa_{m,q} by basis-state binning: every computational basis state has a
// definite syndrome and homology class.
KappaTable kappa_exact(const Statevector& psi, const Lattice& lat);

// sum_m max_q kappa_{m,q}; the finite-size decodability score.
double sum_max_kappa(const KappaTable& table);

// i.i.d. X flips with probability p on every edge.
ErrorSample sample_errors(const Lattice& lat, double p, Rng& rng);
ErrorSample sample_errors(const Lattice& lat, double p, uint64_t seed, uint64_t index);

// <prod_{e in half} Z_e> / sqrt(<prod_{e in loop} Z_e>); nullopt when the
// loop expectation is not positive.
std::optional<double> fm_string_order(const Statevector& psi, const Lattice& lat,
                                      const EdgeSet& half_path, const EdgeSet& full_loop);

using DecoderFn = std::function<EdgeSet(const Lattice&, const Syndrome&)>;

// Exact syndrome-resolved expectation of a Z string on the QEC-recovered
// ensemble: sum_m <Z_obs> on X(R_m) P_m |psi>.
double qec_recovered_expectation(const Statevector& psi, const Lattice& lat,
                                 const DecoderFn& decoder, const EdgeSet& observable);

} // namespace oneform
