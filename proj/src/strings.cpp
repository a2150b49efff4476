#include "oneform/strings.hpp"

#include <cstdlib>
#include <stdexcept>

namespace oneform {

namespace {

// signed step count along one axis: shortest wrap direction, + on ties
int axis_delta(int a, int b, int len, bool periodic) {
    if (!periodic) return b - a;
    int fwd = ((b - a) % len + len) % len;
    int bwd = len - fwd;
    if (fwd == 0) return 0;
    return (fwd <= bwd) ? fwd : -bwd;
}

} // namespace

int plaq_distance(const Lattice& lat, int pa, int pb) {
    const bool xper = lat.kind() == Boundary::torus;
    int dx = axis_delta(lat.plaq_x(pa), lat.plaq_x(pb), lat.lx(), xper);
    int dy = axis_delta(lat.plaq_y(pa), lat.plaq_y(pb), lat.ly(), true);
    return std::abs(dx) + std::abs(dy);
}

int boundary_distance(const Lattice& lat, int p) {
    if (lat.kind() != Boundary::cylinder) throw std::logic_error("boundary distance: cylinder only");
    const int x = lat.plaq_x(p);
    return std::min(x + 1, lat.lx() - x);
}

EdgeSet path_between(const Lattice& lat, int pa, int pb) {
    const bool xper = lat.kind() == Boundary::torus;
    EdgeSet path(lat.n_edges());
    int x = lat.plaq_x(pa), y = lat.plaq_y(pa);
    int dx = axis_delta(x, lat.plaq_x(pb), lat.lx(), xper);
    int dy = axis_delta(y, lat.plaq_y(pb), lat.ly(), true);
    // stepping (x,y)->(x+1,y) crosses north(x+1,y); ->(x-1,y) crosses north(x,y)
    while (dx != 0) {
        if (dx > 0) { path.flip(lat.north_edge(x + 1, y)); ++x; --dx; }
        else        { path.flip(lat.north_edge(x, y)); --x; ++dx; }
        if (xper) x = ((x % lat.lx()) + lat.lx()) % lat.lx();
    }
    // stepping (x,y)->(x,y+1) crosses east(x,y+1); ->(x,y-1) crosses east(x,y)
    while (dy != 0) {
        if (dy > 0) { path.flip(lat.east_edge(x, y + 1)); ++y; --dy; }
        else        { path.flip(lat.east_edge(x, y)); --y; ++dy; }
        y = ((y % lat.ly()) + lat.ly()) % lat.ly();
    }
    return path;
}

EdgeSet path_to_boundary(const Lattice& lat, int p) {
    if (lat.kind() != Boundary::cylinder) throw std::logic_error("boundary path: cylinder only");
    EdgeSet path(lat.n_edges());
    const int x = lat.plaq_x(p), y = lat.plaq_y(p);
    const int left = x + 1, right = lat.lx() - x;
    if (left <= right) {
        for (int k = 0; k <= x; ++k) path.set(lat.north_edge(k, y));
    } else {
        for (int k = x + 1; k <= lat.lx(); ++k) path.set(lat.north_edge(k, y));
    }
    return path;
}

EdgeSet reference_chain(const Lattice& lat, const Syndrome& syn) {
    std::vector<int> d = syn.defects();
    EdgeSet chain(lat.n_edges());
    if (lat.kind() == Boundary::torus) {
        if (d.size() % 2 != 0) throw std::invalid_argument("torus syndrome with odd defect count");
        for (size_t i = 0; i + 1 < d.size(); i += 2) chain ^= path_between(lat, d[i], d[i + 1]);
    } else {
        // pair consecutively; a trailing odd defect exits through the boundary
        size_t i = 0;
        for (; i + 1 < d.size(); i += 2) chain ^= path_between(lat, d[i], d[i + 1]);
        if (i < d.size()) chain ^= path_to_boundary(lat, d[i]);
    }
    return chain;
}

EdgeSet reference_chain_in_class(const Lattice& lat, const Syndrome& syn,
                                 HomologyClass target) {
    EdgeSet chain = reference_chain(lat, syn);
    HomologyClass got = lat.chain_class(chain);
    if (got.qx != target.qx) chain ^= lat.cycles().dual_x;
    if (got.qy != target.qy) chain ^= lat.cycles().dual_y;
    return chain;
}

} // namespace oneform
