#pragma once

#include "oneform/decode.hpp"
#include "oneform/lattice.hpp"

namespace oneform {

// Rectangular plaquette window inside a full system; folding identifies
// opposite window boundaries (top-bottom first, then left-right).
struct RegionSpec {
    int x0 = 0, y0 = 0;  // lower corner, plaquette coordinates
    int w = 0, h = 0;

    bool contains(const Lattice& lat, int p) const {
        const int dx = ((lat.plaq_x(p) - x0) % lat.lx() + lat.lx()) % lat.lx();
        const int dy = ((lat.plaq_y(p) - y0) % lat.ly() + lat.ly()) % lat.ly();
        return dx < w && dy < h;
    }
};

struct SplitStrings {
    std::vector<std::pair<int, int>> in_a;       // both endpoints in A
    std::vector<std::pair<int, int>> straddling; // one endpoint in A
    std::vector<std::pair<int, int>> in_b;       // no endpoint in A (incl. boundary)
    Syndrome stripped_a;                         // A's syndrome after removing
                                                 // straddling endpoints
};

// Partition the matched pairs of a full-system decode by endpoint
// membership; A-side endpoints of straddling strings are removed from A's
// syndrome.
SplitStrings split_strings(const Lattice& lat, const Syndrome& syndrome,
                           const DecodeResult& full, const RegionSpec& region);

struct FoldedSample {
    int score = 0;          // +-1 seam-crossing comparison
    int straddling = 0;     // straddling pair count (audit)
    int removed = 0;        // defects stripped from A
};

// One pipeline pass: full decode, strip, fold A onto a torus, re-decode,
// and compare seam crossings of the new recovery against the original in-A
// strings.  The sample's true chain feeds the degenerate identity-fold case
// (torus, A = whole system), where the pipeline reduces to the plain W_Z
// indicator.
FoldedSample folded_sample(const Lattice& lat, const ErrorSample& sample,
                           const RegionSpec& region, BlossomMatcher& matcher);

struct FoldedIndicator {
    double mean = 0;
    double stderr_ = 0;
    int n_samples = 0;
};

FoldedIndicator folded_indicator(const Lattice& lat, const RegionSpec& region, double p,
                                 int n_samples, uint64_t seed);

} // namespace oneform
