#include "oneform/matching.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace oneform {

namespace {
constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;
}

void BlossomMatcher::update_slack(int u, int x) {
    if (!slack_[x] || e_delta(g(u, x)) < e_delta(g(slack_[x], x))) slack_[x] = u;
}

void BlossomMatcher::set_slack(int x) {
    slack_[x] = 0;
    for (int u = 1; u <= n_; ++u)
        if (g(u, x).w > 0 && st_[u] != x && s_[st_[u]] == 0) update_slack(u, x);
}

void BlossomMatcher::q_push(int x) {
    if (x <= n_) {
        queue_.push_back(x);
    } else {
        for (int y : flower_[x]) q_push(y);
    }
}

void BlossomMatcher::set_st(int x, int b) {
    st_[x] = b;
    if (x > n_)
        for (int y : flower_[x]) set_st(y, b);
}

int BlossomMatcher::get_pr(int b, int xr) {
    auto& f = flower_[b];
    int pr = static_cast<int>(std::find(f.begin(), f.end(), xr) - f.begin());
    if (pr % 2 == 1) {
        // walk the other way round the odd cycle
        std::reverse(f.begin() + 1, f.end());
        return static_cast<int>(f.size()) - pr;
    }
    return pr;
}

void BlossomMatcher::set_match(int u, int v) {
    match_[u] = g(u, v).v;
    if (u <= n_) return;
    const Edge& e = g(u, v);
    const int xr = flower_from(u, e.u);
    const int pr = get_pr(u, xr);
    auto& f = flower_[u];
    for (int i = 0; i < pr; ++i) set_match(f[i], f[i ^ 1]);
    set_match(xr, v);
    std::rotate(f.begin(), f.begin() + pr, f.end());
}

void BlossomMatcher::augment(int u, int v) {
    for (;;) {
        int xnv = st_[match_[u]];
        set_match(u, v);
        if (!xnv) return;
        set_match(xnv, st_[pa_[xnv]]);
        u = st_[pa_[xnv]];
        v = xnv;
    }
}

int BlossomMatcher::get_lca(int u, int v) {
    for (++timer_; u || v; std::swap(u, v)) {
        if (u == 0) continue;
        if (vis_[u] == timer_) return u;
        vis_[u] = timer_;
        u = st_[match_[u]];
        if (u) u = st_[pa_[u]];
    }
    return 0;
}

void BlossomMatcher::add_blossom(int u, int lca, int v) {
    int b = n_ + 1;
    while (b <= n_x_ && st_[b]) ++b;
    if (b > n_x_) ++n_x_;
    if (n_x_ >= slots_) throw std::logic_error("blossom slots exhausted");

    lab_[b] = 0;
    s_[b] = 0;
    match_[b] = match_[lca];
    auto& f = flower_[b];
    f.clear();
    f.push_back(lca);
    for (int x = u, y; x != lca; x = st_[pa_[y]]) {
        f.push_back(x);
        f.push_back(y = st_[match_[x]]);
        q_push(y);
    }
    std::reverse(f.begin() + 1, f.end());
    for (int x = v, y; x != lca; x = st_[pa_[y]]) {
        f.push_back(x);
        f.push_back(y = st_[match_[x]]);
        q_push(y);
    }
    set_st(b, b);
    for (int x = 1; x <= n_x_; ++x) g(b, x).w = g(x, b).w = 0;
    for (int x = 1; x <= n_; ++x) flower_from(b, x) = 0;
    for (int xs : f) {
        for (int x = 1; x <= n_x_; ++x)
            if (g(b, x).w == 0 || e_delta(g(xs, x)) < e_delta(g(b, x))) {
                g(b, x) = g(xs, x);
                g(x, b) = g(x, xs);
            }
        for (int x = 1; x <= n_; ++x)
            if (flower_from(xs, x)) flower_from(b, x) = xs;
    }
    set_slack(b);
}

void BlossomMatcher::expand_blossom(int b) {
    auto& f = flower_[b];
    for (int x : f) set_st(x, x);
    const int xr = flower_from(b, g(b, pa_[b]).u);
    const int pr = get_pr(b, xr);
    for (int i = 0; i < pr; i += 2) {
        const int xs = f[i], xns = f[i + 1];
        pa_[xs] = g(xns, xs).u;
        s_[xs] = 1;
        s_[xns] = 0;
        slack_[xs] = 0;
        set_slack(xns);
        q_push(xns);
    }
    s_[xr] = 1;
    pa_[xr] = pa_[b];
    for (size_t i = pr + 1; i < f.size(); ++i) {
        s_[f[i]] = -1;
        set_slack(f[i]);
    }
    st_[b] = 0;
}

bool BlossomMatcher::on_found_edge(const Edge& e) {
    const int u = st_[e.u], v = st_[e.v];
    if (s_[v] == -1) {
        pa_[v] = e.u;
        s_[v] = 1;
        const int nu = st_[match_[v]];
        slack_[v] = slack_[nu] = 0;
        s_[nu] = 0;
        q_push(nu);
    } else if (s_[v] == 0) {
        const int lca = get_lca(u, v);
        if (!lca) {
            augment(u, v);
            augment(v, u);
            return true;
        }
        add_blossom(u, lca, v);
    }
    return false;
}

bool BlossomMatcher::matching_phase() {
    std::fill(s_.begin() + 1, s_.begin() + n_x_ + 1, int8_t(-1));
    std::fill(slack_.begin() + 1, slack_.begin() + n_x_ + 1, 0);
    queue_.clear();
    qhead_ = 0;
    for (int x = 1; x <= n_x_; ++x)
        if (st_[x] == x && !match_[x]) {
            pa_[x] = 0;
            s_[x] = 0;
            q_push(x);
        }
    if (queue_.empty()) return false;

    for (;;) {
        while (qhead_ < queue_.size()) {
            const int u = queue_[qhead_++];
            if (s_[st_[u]] == 1) continue;
            for (int v = 1; v <= n_; ++v)
                if (g(u, v).w > 0 && st_[u] != st_[v]) {
                    if (e_delta(g(u, v)) == 0) {
                        if (on_found_edge(g(u, v))) return true;
                    } else {
                        update_slack(u, st_[v]);
                    }
                }
        }
        int64_t d = kInf;
        for (int b = n_ + 1; b <= n_x_; ++b)
            if (st_[b] == b && s_[b] == 1) d = std::min(d, lab_[b] / 2);
        for (int x = 1; x <= n_x_; ++x)
            if (st_[x] == x && slack_[x]) {
                if (s_[x] == -1) d = std::min(d, e_delta(g(slack_[x], x)));
                else if (s_[x] == 0) d = std::min(d, e_delta(g(slack_[x], x)) / 2);
            }
        if (d >= kInf) throw std::logic_error("blossom: no dual step available");
        for (int u = 1; u <= n_; ++u) {
            if (s_[st_[u]] == 0) {
                lab_[u] -= d;
                if (lab_[u] <= 0) throw std::logic_error("blossom: dual collapsed (matching not perfect)");
            } else if (s_[st_[u]] == 1) {
                lab_[u] += d;
            }
        }
        for (int b = n_ + 1; b <= n_x_; ++b)
            if (st_[b] == b) {
                if (s_[b] == 0) lab_[b] += d * 2;
                else if (s_[b] == 1) lab_[b] -= d * 2;
            }
        queue_.clear();
        qhead_ = 0;
        for (int x = 1; x <= n_x_; ++x)
            if (st_[x] == x && slack_[x] && st_[slack_[x]] != x &&
                e_delta(g(slack_[x], x)) == 0) {
                if (on_found_edge(g(slack_[x], x))) return true;
            }
        for (int b = n_ + 1; b <= n_x_; ++b)
            if (st_[b] == b && s_[b] == 1 && lab_[b] == 0) expand_blossom(b);
    }
}

MatchingResult BlossomMatcher::solve_min(int n, const std::function<int64_t(int, int)>& dist) {
    if (n == 0) return {std::vector<int>{}, 0};
    if (n % 2 != 0) throw std::invalid_argument("perfect matching needs an even node count");

    n_ = n;
    slots_ = 2 * n + 8;
    n_x_ = n;
    g_.assign(size_t(slots_) * slots_, Edge{});
    lab_.assign(slots_, 0);
    match_.assign(slots_, 0);
    slack_.assign(slots_, 0);
    st_.assign(slots_, 0);
    pa_.assign(slots_, 0);
    vis_.assign(slots_, 0);
    s_.assign(slots_, -1);
    flower_from_.assign(size_t(slots_) * (n_ + 1), 0);
    flower_.assign(slots_, {});
    timer_ = 0;

    // complement distances: maximizing sum of (1 + dmax - dist) over a
    // perfect matching minimizes sum of dist, and all-positive weights make
    // the maximum matching perfect
    int64_t dmax = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) dmax = std::max(dmax, dist(u, v));
    int64_t wmax = 0;
    for (int u = 1; u <= n; ++u) {
        st_[u] = u;
        flower_from(u, u) = u;
        for (int v = 1; v <= n; ++v) {
            const int64_t w = (u == v) ? 0 : 1 + dmax - dist(u - 1, v - 1);
            g(u, v) = Edge{u, v, w};
            wmax = std::max(wmax, w);
        }
    }
    for (int u = 1; u <= n; ++u) lab_[u] = wmax;

    int pairs = 0;
    while (matching_phase()) ++pairs;
    if (2 * pairs != n) throw std::logic_error("blossom failed to find a perfect matching");

    MatchingResult res;
    res.mate.assign(n, -1);
    res.total_weight = 0;
    for (int u = 1; u <= n; ++u) {
        res.mate[u - 1] = match_[u] - 1;
        if (match_[u] > u) res.total_weight += dist(u - 1, match_[u] - 1);
    }
    return res;
}

} // namespace oneform
