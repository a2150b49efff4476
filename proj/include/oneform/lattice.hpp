#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace oneform {

// Subset of lattice edges under symmetric difference.  Used for error
// chains, recovery strings and loop operators alike.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(int n_edges) : n_(n_edges), w_((n_edges + 63) / 64, 0) {}

    int size() const { return n_; }
    bool test(int e) const { return (w_[e >> 6] >> (e & 63)) & 1; }
    void set(int e) { w_[e >> 6] |= 1ull << (e & 63); }
    void reset(int e) { w_[e >> 6] &= ~(1ull << (e & 63)); }
    void flip(int e) { w_[e >> 6] ^= 1ull << (e & 63); }
    void clear() { for (auto& x : w_) x = 0; }

    EdgeSet& operator^=(const EdgeSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) { a ^= b; return a; }
    bool operator==(const EdgeSet& o) const { return n_ == o.n_ && w_ == o.w_; }

    int count() const {
        int c = 0;
        for (auto x : w_) c += __builtin_popcountll(x);
        return c;
    }
    int count_and(const EdgeSet& o) const {
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += __builtin_popcountll(w_[i] & o.w_[i]);
        return c;
    }
    bool empty() const {
        for (auto x : w_) if (x) return false;
        return true;
    }
    std::vector<int> edges() const {
        std::vector<int> out;
        for (int e = 0; e < n_; ++e) if (test(e)) out.push_back(e);
        return out;
    }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

// Plaquette eigenvalues m_p = ±1; stored as defect flags (1 means m_p = -1).
struct Syndrome {
    std::vector<uint8_t> neg;

    int n_plaquettes() const { return static_cast<int>(neg.size()); }
    int defect_count() const {
        int c = 0;
        for (auto v : neg) c += v;
        return c;
    }
    std::vector<int> defects() const {
        std::vector<int> out;
        for (int p = 0; p < n_plaquettes(); ++p) if (neg[p]) out.push_back(p);
        return out;
    }
    bool trivial() const { return defect_count() == 0; }
    bool operator==(const Syndrome& o) const { return neg == o.neg; }
    // bitmask form, valid for n_plaquettes <= 32 (exact-mode lattices)
    uint32_t mask() const {
        uint32_t m = 0;
        for (int p = 0; p < n_plaquettes(); ++p) if (neg[p]) m |= 1u << p;
        return m;
    }
};

// Eigenvalues (q_x, q_y) of the two non-contractible Z loops.
struct HomologyClass {
    int qx = 1;
    int qy = 1;

    bool operator==(const HomologyClass& o) const { return qx == o.qx && qy == o.qy; }
    // index in tie-break order (1,1), (1,-1), (-1,1), (-1,-1)
    int index() const { return ((qx < 0) << 1) | (qy < 0); }
    static HomologyClass from_index(int i) {
        return HomologyClass{(i & 2) ? -1 : 1, (i & 1) ? -1 : 1};
    }
};

// Fixed non-contractible representatives.  Cdual_x is the dual loop that
// crosses C_x an odd number of times (it winds in y), and symmetrically.
struct CycleReps {
    EdgeSet cx, cy;          // primal loops carrying W_Z^[x], W_Z^[y]
    EdgeSet dual_x, dual_y;  // dual loops flipping q_x, q_y respectively
};

enum class Boundary { torus, cylinder };

// Square lattice with a qubit on every edge.  Torus: Lx x Ly plaquettes,
// both directions periodic.  Cylinder: periodic in y, open in x with rough
// ends; the outermost north-edge columns belong to a single plaquette, so
// error strings may terminate on the boundary there.
//
// Torus edge indexing is fixed for file-format stability:
//   edge(v, dir) = 2*(v_y*Lx + v_x) + dir,  dir 0 = east, 1 = north.
// east(x,y) joins vertices (x,y)-(x+1,y) and separates plaquettes
// (x,y)/(x,y-1); north(x,y) joins (x,y)-(x,y+1) and separates (x,y)/(x-1,y).
class Lattice {
public:
    static Lattice torus(int lx, int ly);
    static Lattice cylinder(int wp, int ly);

    Boundary kind() const { return kind_; }
    int lx() const { return lx_; }
    int ly() const { return ly_; }
    int n_edges() const { return n_edges_; }
    int n_vertices() const { return n_vertices_; }
    int n_plaquettes() const { return lx_ * ly_; }

    int plaq_index(int x, int y) const { return y * lx_ + x; }
    int plaq_x(int p) const { return p % lx_; }
    int plaq_y(int p) const { return p / lx_; }

    // torus: both directions wrap; cylinder: x in [0, lx], no wrap
    int east_edge(int x, int y) const;
    int north_edge(int x, int y) const;

    const std::array<int, 4>& plaquette_edges(int p) const { return plaq_edges_[p]; }
    EdgeSet plaquette_boundary(int p) const;

    // the 1 or 2 plaquettes an edge belongs to (-1 marks the open boundary)
    const std::array<int, 2>& edge_plaquettes(int e) const { return edge_plaqs_[e]; }

    // torus only
    int vertex_index(int x, int y) const { return y * lx_ + x; }
    std::array<int, 4> vertex_star_edges(int v) const;
    EdgeSet vertex_star(int v) const;
    const CycleReps& cycles() const;

    // endpoints of edge e as vertex indices (torus only; used by the RBIM)
    const std::array<int, 2>& edge_vertices(int e) const { return edge_verts_[e]; }

    Syndrome chain_syndrome(const EdgeSet& chain) const;
    int crossing_parity(const EdgeSet& chain, const EdgeSet& loop) const;
    HomologyClass chain_class(const EdgeSet& chain) const;  // torus only

    std::string header() const;  // "Lx Ly boundary" stamp for result files

private:
    Lattice() = default;
    void build_tables();

    Boundary kind_ = Boundary::torus;
    int lx_ = 0, ly_ = 0;
    int n_edges_ = 0, n_vertices_ = 0;
    std::vector<std::array<int, 4>> plaq_edges_;
    std::vector<std::array<int, 2>> edge_plaqs_;
    std::vector<std::array<int, 2>> edge_verts_;
    CycleReps cycles_;
};

} // namespace oneform
