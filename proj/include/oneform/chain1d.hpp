#pragma once

#include <cstdint>
#include <vector>

namespace oneform {

struct ChainState {
    int length = 0;
    std::vector<double> amp;
    double energy = 0;
};

struct IndicatorPoint {
    double mean = 0;
    double stderr_ = 0;
    int n_samples = 0;
};

// Closed-form decodability score of the 1D product state:
//   cos^{2L}(t/2) * sum_{i<=L/2} C(L,i) tan^{2i}(t/2)
// with the i = L/2 term at half weight (the two flip classes coincide
// there, so that syndrome contributes a single max term).
double criterion_1d(double theta, int L);

// Lowest state of H = -sum Z Z - h_x sum X - h_z sum Z, periodic, L <= 16.
// At h_z = 0 the returned state is the even combination under global spin
// flip (enforced, so deep-FM sampling exercises the vote).
ChainState ising_ground_state(int L, double hx, double hz);

// Sample Z-basis strings, majority-vote away the global flip ambiguity,
// report the mean post-correction single-site <Z>.
IndicatorPoint majority_indicator(const ChainState& state, int n_samples, uint64_t seed);

// Blockwise 3 -> 1 majority coarse-graining; length must divide 3^rounds.
std::vector<uint8_t> rg1d_majority(const std::vector<uint8_t>& bits, int rounds);

// Ground state of the transverse-field cluster chain
// H = -(1-Delta) sum X_i - Delta sum Z_{i-1} X_i Z_{i+1}, periodic.
ChainState cluster_ground_state(int L, double delta);

// Appendix-style subsystem check for the cluster chain: measure the
// stabilizers, pair charges per sublattice (shortest flip class), strip
// pairs straddling the A|B cut, fold A into a ring, re-pair, and score
// whether the two pairings give the same string configuration in A.
IndicatorPoint spt_subsystem_indicator(double delta, int L_total, int L_sub,
                                       int n_samples, uint64_t seed);

} // namespace oneform
