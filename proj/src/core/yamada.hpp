#pragma once

#include <utility>
#include <vector>

#include "diagram.hpp"
#include "laurent.hpp"

namespace thetapoly {

// Abstract multigraph; loops are (v, v), parallel edges are repeated pairs.
struct Multigraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

// Graph polynomial determined by: empty graph 1, isolated vertex -1, a loop
// multiplies by -sigma, disjoint unions multiply, and h(G) = h(G-e) + h(G/e)
// for any non-loop edge e. Evaluated by memoized deletion-contraction.
LaurentPoly h_poly(const Multigraph& g);

struct YamadaOptions {
  bool simplify_first = true;
  // Processing order for the state sum; empty means the built-in greedy order.
  std::vector<std::size_t> crossing_order;
};

// R_A(D) via a three-way resolution of every crossing (A-smoothing weight A,
// B-smoothing weight A^-1, 4-valent vertex weight 1) with h evaluated on each
// resolved graph. The sum is organized as a transfer computation over a
// frontier of open arcs; no 3^c enumeration happens.
LaurentPoly yamada_raw(const Diagram& d, const YamadaOptions& opts = {});

// Reference evaluation: enumerates all 3^c states explicitly, contracts each to
// its multigraph and calls h_poly. Exponential; meant for cross-checking.
LaurentPoly yamada_raw_state_sum(const Diagram& d);

struct YamadaValue {
  LaurentPoly raw;
  LaurentPoly normalized;
  int s = 0;
  int n = 0;
};

// (-A)^{n - 2s} R_A(D) / (sigma - sigma^2). Requires a theta-curve diagram.
YamadaValue yamada_normalized(const Diagram& d, const YamadaOptions& opts = {});

}  // namespace thetapoly
