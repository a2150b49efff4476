#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace oneform {

// pairwise summation: worker-count independent up to bit identity when the
// slot order is fixed
inline double pairwise_sum(const double* v, size_t n) {
    if (n <= 8) {
        double s = 0;
        for (size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const size_t h = n / 2;
    return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

inline double pairwise_sum(const std::vector<double>& v) {
    return pairwise_sum(v.data(), v.size());
}

struct MeanErr {
    double mean = 0;
    double stderr_ = 0;
};

inline MeanErr mean_stderr(const std::vector<double>& vals) {
    MeanErr me;
    const size_t n = vals.size();
    if (n == 0) return me;
    me.mean = pairwise_sum(vals) / static_cast<double>(n);
    if (n > 1) {
        std::vector<double> sq(n);
        for (size_t i = 0; i < n; ++i) sq[i] = (vals[i] - me.mean) * (vals[i] - me.mean);
        me.stderr_ = std::sqrt(pairwise_sum(sq) / (static_cast<double>(n) * (n - 1)));
    }
    return me;
}

} // namespace oneform
