#include "oneform/rg2d.hpp"

#include <cmath>
#include <stdexcept>

namespace oneform {

namespace {
inline int wrap(int a, int n) { return ((a % n) + n) % n; }
}

BitGrid BitGrid::zeros(int size) {
    if (size < 2 || (size & (size - 1)) != 0)
        throw std::invalid_argument("grid size must be a power of two >= 2");
    BitGrid g;
    g.size = size;
    g.east.assign(size_t(size) * size, 0);
    g.north.assign(size_t(size) * size, 0);
    return g;
}

BitGrid BitGrid::from_chain(const Lattice& lat, const EdgeSet& chain) {
    if (lat.kind() != Boundary::torus || lat.lx() != lat.ly())
        throw std::invalid_argument("bit grids live on square tori");
    BitGrid g = zeros(lat.lx());
    for (int y = 0; y < lat.ly(); ++y)
        for (int x = 0; x < lat.lx(); ++x) {
            g.east[size_t(y) * g.size + x] = chain.test(lat.east_edge(x, y));
            g.north[size_t(y) * g.size + x] = chain.test(lat.north_edge(x, y));
        }
    if (!g.closed()) throw std::invalid_argument("grid violates the closed-loop constraint");
    return g;
}

int BitGrid::ones() const {
    int c = 0;
    for (auto b : east) c += b;
    for (auto b : north) c += b;
    return c;
}

bool BitGrid::closed() const {
    const int n = size;
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            // plaquette (x,y): east(x,y), east(x,y+1), north(x,y), north(x+1,y)
            int parity = east[size_t(y) * n + x] ^ east[size_t(wrap(y + 1, n)) * n + x] ^
                         north[size_t(y) * n + x] ^ north[size_t(y) * n + wrap(x + 1, n)];
            if (parity) return false;
        }
    return true;
}

BitGrid rg_step(const BitGrid& grid) {
    const int n = grid.size;
    if (n < 4) throw std::invalid_argument("rg_step needs linear size >= 4");

    BitGrid work = grid;
    // horizontal CNOT sweep: target east(2x,y), control east(2x+1,y)
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; x += 2)
            work.east[size_t(y) * n + x] ^= work.east[size_t(y) * n + x + 1];
    // vertical CNOT sweep on surviving columns: target north(2x,2y),
    // control north(2x,2y+1)
    for (int y = 0; y < n; y += 2)
        for (int x = 0; x < n; x += 2)
            work.north[size_t(y) * n + x] ^= work.north[size_t(y + 1) * n + x];

    const int m = n / 2;
    BitGrid out = BitGrid::zeros(m);
    for (int y = 0; y < m; ++y)
        for (int x = 0; x < m; ++x) {
            out.east[size_t(y) * m + x] = work.east[size_t(2 * y) * n + 2 * x];
            out.north[size_t(y) * m + x] = work.north[size_t(2 * y) * n + 2 * x];
        }
    // controlled vertex flips: both conserved controls at a coarse vertex set
    // means a domain-wall corner sits there; toggling the coarse star keeps
    // the wall from growing
    for (int y = 0; y < m; ++y)
        for (int x = 0; x < m; ++x) {
            const uint8_t ce = grid.east[size_t(2 * y) * n + wrap(2 * x - 1, n)];
            const uint8_t cn = grid.north[size_t(wrap(2 * y - 1, n)) * n + 2 * x];
            if (ce && cn) {
                out.east[size_t(y) * m + x] ^= 1;
                out.east[size_t(y) * m + wrap(x - 1, m)] ^= 1;
                out.north[size_t(y) * m + x] ^= 1;
                out.north[size_t(wrap(y - 1, m)) * m + x] ^= 1;
            }
        }
    return out;
}

int disorder_probe(BitGrid grid, int n_rg) {
    const int max_rounds = static_cast<int>(std::round(std::log2(grid.size))) - 1;
    if (n_rg > max_rounds) throw std::invalid_argument("n_rg exceeds log2(size) - 1");
    for (int r = 0; r < n_rg; ++r) grid = rg_step(grid);
    return grid.east[0] ? -1 : 1;
}

DisorderPoint disorder_parameter(const std::vector<BitGrid>& samples, int n_rg) {
    DisorderPoint pt;
    pt.n_samples = static_cast<int>(samples.size());
    if (samples.empty()) return pt;
    double sum = 0;
    for (const auto& g : samples) sum += disorder_probe(g, n_rg);
    pt.mean = sum / pt.n_samples;
    const double var = (1.0 - pt.mean * pt.mean);
    pt.stderr_ = std::sqrt(std::max(0.0, var) / pt.n_samples);
    return pt;
}

} // namespace oneform
