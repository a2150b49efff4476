#pragma once

#include <string>

#include "oneform/lattice.hpp"

namespace oneform {

// Ising spins on torus vertices, one bond per primal edge.  Bond factor
// sign_e = (1-2s_e) from the reference chain, times -1 on the twist seam.
struct RbimInstance {
    const Lattice* lat = nullptr;
    double coupling = 0;       // J; ignored in zero-temperature mode
    bool zero_temperature = false;
    std::vector<int8_t> sign;  // +1 / -1 per edge
};

// J on the Nishimori line: exp(-2J) = p/(1-p).  Returns +inf for p <= 0
// (callers switch the instance to zero-temperature mode).
double nishimori_coupling(double p);

RbimInstance make_rbim(const Lattice& lat, double coupling, const EdgeSet& reference,
                       bool twist_x = false, bool twist_y = false);

// ln Z by exhaustive spin enumeration (N_v <= 25).
double log_partition_exact(const RbimInstance& inst);

// ln Z by row-to-row transfer (width Lx <= 12, any Ly); matches the exact
// sum to ~1e-12 relative where both apply.
double log_partition_transfer(const RbimInstance& inst);

// picks the exact route when it fits, transfer otherwise
double log_partition(const RbimInstance& inst);

// zero-temperature mode: min over spins of -sum_e sign_e s_v s_v'
// (exhaustive, N_v <= 25); equals |S xor C| - N_e/... callers use it to
// cross-check MWPM costs.
double ground_state_energy(const RbimInstance& inst);

struct IdentityCheck {
    std::string name;
    double lhs_log = 0;
    double rhs_log = 0;
    double rel_err = 0;
};

struct IdentityReport {
    double g_x = 0;
    std::vector<IdentityCheck> checks;
    double max_rel_err = 0;
};

// Finite-size checks of the squared-RBIM / Ising correspondences:
//   sum_{m,q} Z(J,S_{m,q})^2              = 2 [2 g_x^-1 (1+g_x^2)]^{N_e/2} Z_Ising(Jt)
//   sum_{m,q} Z(J,S) Z(J,S + dual loop)   = same prefactor times twisted Z_Ising
// with exp(-2 Jt) = 2 g_x / (1+g_x^2) and J = -ln(g_x)/2.
IdentityReport ising_twist_identities(const Lattice& lat, double g_x);

} // namespace oneform
