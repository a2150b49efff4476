#pragma once

#include "oneform/lattice.hpp"

namespace oneform {

// One bit per edge of a 2^N x 2^N torus.  Valid grids satisfy the closed
// loop constraint: even 1-parity around every plaquette.
struct BitGrid {
    int size = 0;  // linear plaquette count, power of two
    std::vector<uint8_t> east;   // east(x,y) at y*size + x
    std::vector<uint8_t> north;  // north(x,y) at y*size + x

    static BitGrid zeros(int size);
    static BitGrid from_chain(const Lattice& lat, const EdgeSet& chain);

    int ones() const;
    bool closed() const;  // plaquette parity check
};

// One coarse-graining round: horizontal then vertical CNOT sweeps halve the
// lattice, then a controlled vertex flip shrinks domain-wall corners.
// Stencil (fixed; the reflected choice works equally):
//   east(2x,y)   ^= east(2x+1,y)        for every row y
//   north(2x,2y) ^= north(2x,2y+1)      on the surviving columns
//   coarse edge bits are the targets; the conserved controls are
//   cE(X,Y) = east(2X+1,2Y) and cN(X,Y) = north(2X,2Y+1)
//   flip coarse vertex (X,Y) when cE(X-1,Y) and cN(X,Y-1) are both 1.
// The closed-loop constraint is preserved exactly.
BitGrid rg_step(const BitGrid& grid);

struct DisorderPoint {
    double mean = 0;
    double stderr_ = 0;
    int n_samples = 0;
};

// <Z>_{N_RG}: run n_rg rounds on each corrected grid and read the probe
// edge (lexicographically first edge east(0,0) of the residual grid).
DisorderPoint disorder_parameter(const std::vector<BitGrid>& samples, int n_rg);

// per-sample value, for streaming pipelines
int disorder_probe(BitGrid grid, int n_rg);

} // namespace oneform
