#include "oneform/lattice.hpp"

#include <stdexcept>

namespace oneform {

Lattice Lattice::torus(int lx, int ly) {
    if (lx < 2 || ly < 2) throw std::invalid_argument("torus: Lx and Ly must be >= 2");
    Lattice lat;
    lat.kind_ = Boundary::torus;
    lat.lx_ = lx;
    lat.ly_ = ly;
    lat.n_vertices_ = lx * ly;
    lat.n_edges_ = 2 * lx * ly;
    lat.build_tables();
    return lat;
}

Lattice Lattice::cylinder(int wp, int ly) {
    if (wp < 2 || ly < 2) throw std::invalid_argument("cylinder: Lx and Ly must be >= 2");
    Lattice lat;
    lat.kind_ = Boundary::cylinder;
    lat.lx_ = wp;
    lat.ly_ = ly;
    lat.n_vertices_ = (wp + 1) * ly;
    lat.n_edges_ = wp * ly + (wp + 1) * ly;
    lat.build_tables();
    return lat;
}

int Lattice::east_edge(int x, int y) const {
    if (kind_ == Boundary::torus) {
        x = ((x % lx_) + lx_) % lx_;
        y = ((y % ly_) + ly_) % ly_;
        return 2 * (y * lx_ + x) + 0;
    }
    y = ((y % ly_) + ly_) % ly_;
    return y * lx_ + x;  // x in [0, lx)
}

int Lattice::north_edge(int x, int y) const {
    if (kind_ == Boundary::torus) {
        x = ((x % lx_) + lx_) % lx_;
        y = ((y % ly_) + ly_) % ly_;
        return 2 * (y * lx_ + x) + 1;
    }
    y = ((y % ly_) + ly_) % ly_;
    return lx_ * ly_ + y * (lx_ + 1) + x;  // x in [0, lx]
}

void Lattice::build_tables() {
    const int np = lx_ * ly_;
    plaq_edges_.resize(np);
    edge_plaqs_.assign(n_edges_, {-1, -1});
    edge_verts_.assign(n_edges_, {-1, -1});

    for (int y = 0; y < ly_; ++y) {
        for (int x = 0; x < lx_; ++x) {
            const int p = plaq_index(x, y);
            plaq_edges_[p] = {east_edge(x, y), east_edge(x, y + 1),
                              north_edge(x, y), north_edge(x + 1, y)};
            for (int e : plaq_edges_[p]) {
                if (edge_plaqs_[e][0] < 0) edge_plaqs_[e][0] = p;
                else edge_plaqs_[e][1] = p;
            }
        }
    }

    if (kind_ == Boundary::torus) {
        for (int y = 0; y < ly_; ++y) {
            for (int x = 0; x < lx_; ++x) {
                edge_verts_[east_edge(x, y)] = {vertex_index(x, y),
                                                vertex_index((x + 1) % lx_, y)};
                edge_verts_[north_edge(x, y)] = {vertex_index(x, y),
                                                 vertex_index(x, (y + 1) % ly_)};
            }
        }
        cycles_.cx = EdgeSet(n_edges_);
        cycles_.cy = EdgeSet(n_edges_);
        cycles_.dual_x = EdgeSet(n_edges_);
        cycles_.dual_y = EdgeSet(n_edges_);
        for (int x = 0; x < lx_; ++x) {
            cycles_.cx.set(east_edge(x, 0));
            cycles_.dual_y.set(north_edge(x, 0));
        }
        for (int y = 0; y < ly_; ++y) {
            cycles_.cy.set(north_edge(0, y));
            cycles_.dual_x.set(east_edge(0, y));
        }
    }
}

EdgeSet Lattice::plaquette_boundary(int p) const {
    if (p < 0 || p >= n_plaquettes()) throw std::out_of_range("plaquette index");
    EdgeSet s(n_edges_);
    for (int e : plaq_edges_[p]) s.set(e);
    return s;
}

std::array<int, 4> Lattice::vertex_star_edges(int v) const {
    if (kind_ != Boundary::torus) throw std::logic_error("vertex stars: torus only");
    const int x = v % lx_, y = v / lx_;
    return {east_edge(x, y), east_edge(x - 1, y), north_edge(x, y), north_edge(x, y - 1)};
}

EdgeSet Lattice::vertex_star(int v) const {
    EdgeSet s(n_edges_);
    for (int e : vertex_star_edges(v)) s.set(e);
    return s;
}

const CycleReps& Lattice::cycles() const {
    if (kind_ != Boundary::torus) throw std::logic_error("cycle reps: torus only");
    return cycles_;
}

Syndrome Lattice::chain_syndrome(const EdgeSet& chain) const {
    Syndrome s;
    s.neg.assign(n_plaquettes(), 0);
    for (int e = 0; e < n_edges_; ++e) {
        if (!chain.test(e)) continue;
        for (int p : edge_plaqs_[e])
            if (p >= 0) s.neg[p] ^= 1;
    }
    return s;
}

int Lattice::crossing_parity(const EdgeSet& chain, const EdgeSet& loop) const {
    return (chain.count_and(loop) & 1) ? -1 : 1;
}

HomologyClass Lattice::chain_class(const EdgeSet& chain) const {
    const CycleReps& c = cycles();
    return HomologyClass{crossing_parity(chain, c.cx), crossing_parity(chain, c.cy)};
}

std::string Lattice::header() const {
    return std::to_string(lx_) + "x" + std::to_string(ly_) +
           (kind_ == Boundary::torus ? " torus" : " cylinder");
}

} // namespace oneform
