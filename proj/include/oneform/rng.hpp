#pragma once

#include <cstdint>

namespace oneform {

// splitmix64 finalizer; the workhorse mixer for keys and streams.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Counter-based generator: the stream is a pure function of
// (seed, stream, index), so sample i produces identical draws no matter
// which worker runs it or in what order.  `stream` separates independent
// uses of the same sample index (e.g. error draw vs. measurement draw).
class Rng {
public:
    Rng(uint64_t seed, uint64_t stream, uint64_t index)
        : state_(mix64(mix64(mix64(seed) + stream) ^ mix64(index ^ 0x5851f42d4c957f2dull))) {}

    uint64_t next_u64() { return mix64(state_ += 0x9e3779b97f4a7c15ull); }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    // uniform integer in [0, n)
    uint64_t below(uint64_t n) { return next_u64() % n; }

private:
    uint64_t state_;
};

} // namespace oneform
