#include "oneform/decode.hpp"

#include <algorithm>
#include <stdexcept>

#include "oneform/rbim.hpp"
#include "oneform/strings.hpp"

namespace oneform {

namespace {

// lexicographic 2-opt over equal-cost pair swaps; the blossom output is
// already optimal, this only canonicalizes ties.  Each applied swap strictly
// decreases the sorted pair list, so the loop terminates.
void canonicalize_pairs(const Lattice& lat, std::vector<std::pair<int, int>>& pairs) {
    auto cost = [&](const std::pair<int, int>& pr) {
        if (pr.second < 0) return boundary_distance(lat, pr.first);
        return plaq_distance(lat, pr.first, pr.second);
    };
    auto norm = [](std::pair<int, int> pr) {
        if (pr.second >= 0 && pr.second < pr.first) std::swap(pr.first, pr.second);
        return pr;
    };
    for (auto& pr : pairs) pr = norm(pr);

    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(pairs.begin(), pairs.end());
        for (size_t i = 0; i < pairs.size() && !changed; ++i) {
            for (size_t j = i + 1; j < pairs.size() && !changed; ++j) {
                const auto a = pairs[i], b = pairs[j];
                if (a.second < 0 && b.second < 0) continue;
                const int base = cost(a) + cost(b);
                // the two alternative repairings of the four endpoints
                const std::array<std::array<int, 4>, 2> alts = {
                    std::array<int, 4>{a.first, b.first, a.second, b.second},
                    std::array<int, 4>{a.first, b.second, a.second, b.first}};
                for (const auto& alt : alts) {
                    std::pair<int, int> p1{alt[0], alt[1]}, p2{alt[2], alt[3]};
                    // keep boundary marks attached to a real defect
                    if (p1.first < 0) std::swap(p1.first, p1.second);
                    if (p2.first < 0) std::swap(p2.first, p2.second);
                    if (p1.first < 0 || p2.first < 0) continue;  // two boundary marks
                    p1 = norm(p1);
                    p2 = norm(p2);
                    if (cost(p1) + cost(p2) != base) continue;
                    const std::pair cur{pairs[i], pairs[j]};
                    const std::pair alt2{std::min(p1, p2), std::max(p1, p2)};
                    if (alt2 < cur) {
                        pairs[i] = alt2.first;
                        pairs[j] = alt2.second;
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
    std::sort(pairs.begin(), pairs.end());
}

} // namespace

DecodeResult mwpm_decode(const Lattice& lat, const Syndrome& syndrome, BlossomMatcher& matcher) {
    const std::vector<int> defects = syndrome.defects();
    const int nd = static_cast<int>(defects.size());

    DecodeResult out;
    out.decoder_id = "mwpm";
    out.recovery = EdgeSet(lat.n_edges());

    if (nd == 0) {
        out.predicted = HomologyClass{1, 1};
        return out;
    }

    if (lat.kind() == Boundary::torus) {
        if (nd % 2 != 0) throw std::invalid_argument("torus syndrome with odd defect count");
        auto dist = [&](int i, int j) -> int64_t {
            return plaq_distance(lat, defects[i], defects[j]);
        };
        MatchingResult m = matcher.solve_min(nd, dist);
        for (int i = 0; i < nd; ++i)
            if (m.mate[i] > i) out.pairs.push_back({defects[i], defects[m.mate[i]]});
    } else {
        // one virtual boundary node per defect; virtual-virtual edges are
        // free, so matching a defect to any virtual node costs its own
        // boundary distance
        auto dist = [&](int i, int j) -> int64_t {
            if (i > j) std::swap(i, j);
            if (j < nd) return plaq_distance(lat, defects[i], defects[j]);
            if (i >= nd) return 0;
            return boundary_distance(lat, defects[i]);
        };
        MatchingResult m = matcher.solve_min(2 * nd, dist);
        for (int i = 0; i < nd; ++i) {
            if (m.mate[i] >= nd) out.pairs.push_back({defects[i], -1});
            else if (m.mate[i] > i) out.pairs.push_back({defects[i], defects[m.mate[i]]});
        }
    }

    canonicalize_pairs(lat, out.pairs);
    for (const auto& pr : out.pairs) {
        if (pr.second < 0) {
            out.recovery ^= path_to_boundary(lat, pr.first);
            out.cost += boundary_distance(lat, pr.first);
        } else {
            out.recovery ^= path_between(lat, pr.first, pr.second);
            out.cost += plaq_distance(lat, pr.first, pr.second);
        }
    }
    if (lat.kind() == Boundary::torus) out.predicted = lat.chain_class(out.recovery);
    return out;
}

DecodeResult mwpm_decode(const Lattice& lat, const Syndrome& syndrome) {
    BlossomMatcher matcher;
    return mwpm_decode(lat, syndrome, matcher);
}

LocalDecodeResult local_decode(const Lattice& lat, const Syndrome& syndrome, int max_rounds) {
    if (lat.kind() != Boundary::torus || lat.lx() != lat.ly())
        throw std::invalid_argument("local decoder needs a square torus");
    int n = lat.lx();
    if (n < 2 || (n & (n - 1)) != 0)
        throw std::invalid_argument("local decoder needs a power-of-two size");

    // work on a defect grid; rounds shrink it by 2 each time
    std::vector<uint8_t> cur(syndrome.neg);
    auto at = [](std::vector<uint8_t>& grid, int n_, int x, int y) -> uint8_t& {
        return grid[((y % n_ + n_) % n_) * n_ + ((x % n_ + n_) % n_)];
    };

    LocalDecodeResult out;
    out.remaining_defects = syndrome.defect_count();
    for (int round = 0; round < max_rounds && n >= 2; ++round) {
        // blue blocks anchored at even coordinates: clear even counts
        for (int by = 0; by < n; by += 2)
            for (int bx = 0; bx < n; bx += 2) {
                int c = at(cur, n, bx, by) + at(cur, n, bx + 1, by) +
                        at(cur, n, bx, by + 1) + at(cur, n, bx + 1, by + 1);
                if (c % 2 == 0 && c > 0) {
                    at(cur, n, bx, by) = at(cur, n, bx + 1, by) = 0;
                    at(cur, n, bx, by + 1) = at(cur, n, bx + 1, by + 1) = 0;
                }
            }
        // orange blocks anchored at odd coordinates: clear even counts,
        // fuse odd counts to the upper-left corner, then renormalize
        std::vector<uint8_t> coarse((n / 2) * (n / 2), 0);
        for (int by = 1; by < n; by += 2)
            for (int bx = 1; bx < n; bx += 2) {
                int c = at(cur, n, bx, by) + at(cur, n, bx + 1, by) +
                        at(cur, n, bx, by + 1) + at(cur, n, bx + 1, by + 1);
                coarse[(by / 2) * (n / 2) + (bx / 2)] = c % 2;
            }
        cur.swap(coarse);
        n /= 2;
        int defects = 0;
        for (auto v : cur) defects += v;
        out.density.push_back(static_cast<double>(defects) / (n * n));
        out.remaining_defects = defects;
    }
    out.cleared = (out.remaining_defects == 0);
    return out;
}

HomologyClass ml_decode(const Lattice& lat, const Syndrome& syndrome, double p) {
    if (lat.kind() != Boundary::torus) throw std::invalid_argument("ml decoder: torus only");
    if (p <= 0) return HomologyClass{1, 1};
    if (p >= 1) {
        EdgeSet full(lat.n_edges());
        for (int e = 0; e < lat.n_edges(); ++e) full.set(e);
        return lat.chain_class(full);
    }
    if (lat.n_vertices() > 25 && lat.lx() > 12)
        throw std::invalid_argument("ml decoder: exact-mode lattices only");

    const double j = nishimori_coupling(p);
    const EdgeSet base = reference_chain(lat, syndrome);
    const HomologyClass base_cls = lat.chain_class(base);

    int best = -1;
    double best_log = 0;
    for (int q = 0; q < 4; ++q) {
        const HomologyClass target = HomologyClass::from_index(q);
        EdgeSet s = base;
        if (base_cls.qx != target.qx) s ^= lat.cycles().dual_x;
        if (base_cls.qy != target.qy) s ^= lat.cycles().dual_y;
        const double lz = log_partition(make_rbim(lat, j, s));
        if (best < 0 || lz > best_log) {
            best = q;
            best_log = lz;
        }
    }
    return HomologyClass::from_index(best);
}

std::pair<int, int> evaluate_decode(const ErrorSample& sample, const DecodeResult& result,
                                    const Lattice& lat) {
    Syndrome rs = lat.chain_syndrome(result.recovery);
    if (!(rs == sample.syndrome))
        throw std::logic_error("recovery does not annihilate the syndrome");
    EdgeSet residual = sample.errors ^ result.recovery;
    const CycleReps& c = lat.cycles();
    return {lat.crossing_parity(residual, c.cx), lat.crossing_parity(residual, c.cy)};
}

} // namespace oneform
