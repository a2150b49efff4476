#pragma once

#include "oneform/lattice.hpp"
#include "oneform/matching.hpp"
#include "oneform/qstate.hpp"

namespace oneform {

struct DecodeResult {
    EdgeSet recovery;
    HomologyClass predicted;  // class of the recovery chain (torus only)
    std::string decoder_id;
    long long cost = 0;       // total matched length (MWPM)
    // matched plaquette pairs; second = -1 marks a boundary match (cylinder)
    std::vector<std::pair<int, int>> pairs;
};

// Global minimum-weight perfect matching over the defects (complete graph,
// closed-form torus distances).  On the cylinder every defect also gets a
// virtual boundary partner.  Equal-cost pairings are canonicalized toward
// the lexicographically smallest pair list.
DecodeResult mwpm_decode(const Lattice& lat, const Syndrome& syndrome);

// Reusable-workspace variant for tight Monte Carlo loops.
DecodeResult mwpm_decode(const Lattice& lat, const Syndrome& syndrome, BlossomMatcher& matcher);

struct LocalDecodeResult {
    std::vector<double> density;  // residual charge density after each round
    int remaining_defects = 0;
    bool cleared = false;
};

// Two-phase 2x2 block decoder with lattice renormalization by 2 per round
// (square torus, power-of-two size).
LocalDecodeResult local_decode(const Lattice& lat, const Syndrome& syndrome, int max_rounds);

// Maximum-likelihood class via RBIM partition functions on the Nishimori
// line; ties break toward (1,1), (1,-1), (-1,1), (-1,-1).
HomologyClass ml_decode(const Lattice& lat, const Syndrome& syndrome, double p);

// w_d = crossing parity of (errors xor recovery) with the reference loops;
// (1,1) means the decoder preserved the homology class.
std::pair<int, int> evaluate_decode(const ErrorSample& sample, const DecodeResult& result,
                                    const Lattice& lat);

} // namespace oneform
