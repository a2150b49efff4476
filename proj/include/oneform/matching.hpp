#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace oneform {

struct MatchingResult {
    std::vector<int> mate;    // 0-indexed partner per node
    long long total_weight;   // sum of matched distances
};

// Exact minimum-weight perfect matching on a complete graph with integer
// distances (primal-dual blossom algorithm, O(n^3), integral duals).
// Distances are complemented internally so that every perfect matching
// dominates every partial one.  The object keeps its workspace between
// calls; one instance per thread.
class BlossomMatcher {
public:
    MatchingResult solve_min(int n, const std::function<int64_t(int, int)>& dist);

private:
    struct Edge {
        int u = 0, v = 0;
        int64_t w = 0;
    };

    int n_ = 0, slots_ = 0, n_x_ = 0;
    std::vector<Edge> g_;           // slots x slots
    std::vector<int64_t> lab_;
    std::vector<int> match_, slack_, st_, pa_, vis_;
    std::vector<int8_t> s_;
    std::vector<int> flower_from_;  // slots x (n+1)
    std::vector<std::vector<int>> flower_;
    std::vector<int> queue_;
    size_t qhead_ = 0;
    int timer_ = 0;

    Edge& g(int u, int v) { return g_[size_t(u) * slots_ + v]; }
    int& flower_from(int b, int x) { return flower_from_[size_t(b) * (n_ + 1) + x]; }
    int64_t e_delta(const Edge& e) { return lab_[e.u] + lab_[e.v] - g(e.u, e.v).w * 2; }

    void update_slack(int u, int x);
    void set_slack(int x);
    void q_push(int x);
    void set_st(int x, int b);
    int get_pr(int b, int xr);
    void set_match(int u, int v);
    void augment(int u, int v);
    int get_lca(int u, int v);
    void add_blossom(int u, int lca, int v);
    void expand_blossom(int b);
    bool on_found_edge(const Edge& e);
    bool matching_phase();
};

} // namespace oneform
