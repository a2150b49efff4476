#pragma once

#include "oneform/lattice.hpp"

namespace oneform {

// Shortest-path length between plaquettes (Manhattan, wrapping on the torus,
// no x-wrap on the cylinder).
int plaq_distance(const Lattice& lat, int pa, int pb);

// Distance from a plaquette to the nearest rough boundary (cylinder only).
int boundary_distance(const Lattice& lat, int p);

// Monotone staircase dual path between two plaquettes: x-segment first, then
// y-segment, each along the wrap-shortest direction (+ direction on ties).
EdgeSet path_between(const Lattice& lat, int pa, int pb);

// Straight dual path from plaquette p out of the nearer rough boundary
// (cylinder only; left on ties).
EdgeSet path_to_boundary(const Lattice& lat, int p);

// Some chain with the given syndrome: defects paired consecutively in
// plaquette-index order, joined by staircase paths.  On the torus the defect
// count must be even.  Deterministic; any compatible chain works as an RBIM
// reference because of gauge invariance.
EdgeSet reference_chain(const Lattice& lat, const Syndrome& syn);

// Reference chain adjusted to a target homology class by toggling the fixed
// dual representatives (torus only).
EdgeSet reference_chain_in_class(const Lattice& lat, const Syndrome& syn,
                                 HomologyClass target);

} // namespace oneform
