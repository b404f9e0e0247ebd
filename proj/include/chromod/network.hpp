// Planar-network form of the reduction for abelian Hessenberg functions.
// For abelian h the whole run collapses to a walk on a triangular lattice:
// interior points step down one level, either straight or one column to the
// left, with weights built from a single backstep statistic, and the walk
// ends on the main diagonal at points standing for two-row complete
// products.
#pragma once

#include "chromod/dyck.hpp"
#include "chromod/engine.hpp"

#include <map>
#include <utility>

namespace chromod {

// lattice point (i, j): column i, level j
using NetworkPoint = std::pair<int, int>;

// the two steps leaving an interior point, both dropping one level
enum class NetworkStep {
  vertical,  // (0, -1)
  diagonal,  // (-1, -1)
};

struct PlanarNetwork {
  int n = 0;
  NetworkPoint start{0, 0};
  // weight of each step leaving an interior point
  std::map<std::pair<NetworkPoint, NetworkStep>, QRat> edges;
  // terminal points (l, l), tagged with the complete product k_l k_{n-l}
  std::map<NetworkPoint, Partition> endpoints;
};

// a_{i,j}: how many columns one must walk back from i before the path
// height drops below j, reading h(0) = 0; min{k >= 0 : h(i-k) < j}.
// Throws std::out_of_range for points outside the lattice.
int backstep(const Hess& h, int i, int j);

// Network of h: start at (i0, h(i0)) with i0 = max{j : h(j) < n}, or at
// (0, n) for the complete path.  The diagonal step out of (i, j) weighs
// [a_{i,j}]_q / [n-j+1]_q, the vertical step the complement, and column 0
// has no diagonal step.  Every maximal path ends on the main diagonal.
// h must be abelian.
PlanarNetwork build_network(const Hess& h);

// Numerator total P_l for each endpoint (l, l): the sum over start-to-(l,l)
// paths of the product of [a]_q resp. [n-j+1]_q - [a]_q along the way.
// Every such path carries the same denominator (n-l)!_q / (n-j_start)!_q,
// so the weight into (l, l) is P_l (n-j_start)!_q / (n-l)!_q.
std::map<int, QPoly> endpoint_numerators(const Hess& h);

// Total path weight per endpoint partition; the endpoints (l, l) and
// (n-l, n-l) share the key {l, n-l} and their weights combine.  Zero
// totals are dropped.  Equal to Engine::expand(h) for abelian h.
Expansion network_expansion(const Hess& h);

// sum over endpoints of (total path weight) * base value; every endpoint
// partition must have a base value
QRat evaluate_network(const PlanarNetwork& net,
                      const std::map<Partition, QRat>& base);

// True when, with j0 = min{j : h(j) = n}, n - j0 >= h(i) - i for every i.
// When true every numerator in the network of h has nonnegative
// coefficients; when false no positivity claim is made.  h must be abelian.
bool is_manifestly_positive(const Hess& h);

}  // namespace chromod
