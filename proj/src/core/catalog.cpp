#include <charconv>

#include "diagram.hpp"
#include "error.hpp"
#include "port_graph.hpp"

namespace thetapoly {

namespace {

constexpr const char* kTrivial = R"(theta trivial
V 1 2 3
V 1 3 2
edge 1 E1
edge 2 E2
edge 3 E3
source 1
)";

// Found by search over small diagrams and pinned by P_z = z^2 + z^8 - z^10.
// E1 and E2 together form a trefoil; E3 is a plain arc.
constexpr const char* kTheta31 = R"(theta theta_3_1
V 1 9 5
V 4 9 8
X 7 2 8 1
X 2 7 3 6
X 5 4 6 3
edge 1 E1
edge 2 E1
edge 3 E1
edge 4 E1
edge 5 E2
edge 6 E2
edge 7 E2
edge 8 E2
edge 9 E3
source 1
)";

// Six crossings; no five-crossing diagram with this R turned up.
constexpr const char* kTheta51 = R"(theta theta_5_1
V 1 9 14
V 8 13 15
X 11 1 12 2
X 2 12 3 13
X 14 4 15 3
X 4 7 5 8
X 10 6 11 5
X 6 10 7 9
edge 1 E1
edge 2 E1
edge 3 E1
edge 4 E1
edge 5 E1
edge 6 E1
edge 7 E1
edge 8 E1
edge 9 E2
edge 10 E2
edge 11 E2
edge 12 E2
edge 13 E2
edge 14 E3
edge 15 E3
source 1
)";

}  // namespace

// A (2,k) torus knot tied into E1: twist region c_1..c_k laid out
// horizontally, its bottom strands closed up underneath, its top ends running
// to the source v (left) and sink w (right). E2 and E3 are plain arcs above.
Diagram twist_family(int k) {
  if (k < 1 || k % 2 == 0) throw Error(ErrorCode::bad_parameter, "T(k) needs odd k >= 1, got " + std::to_string(k));
  enum { NE = 0, NW = 1, SW = 2, SE = 3 };
  PortGraph g;
  const int v = g.add_node(3);
  const int w = g.add_node(3);
  std::vector<int> c(static_cast<std::size_t>(k));
  for (auto& n : c) n = g.add_node(4);
  auto at = [&](int i, int compass) { return PortGraph::slot(c[static_cast<std::size_t>(i)], compass); };
  for (int i = 0; i + 1 < k; ++i) {
    g.link(at(i, NE), at(i + 1, NW));
    g.link(at(i, SE), at(i + 1, SW));
  }
  g.link(at(k - 1, SE), at(0, SW));
  g.link(PortGraph::slot(v, 0), at(0, NW));
  g.link(PortGraph::slot(v, 1), PortGraph::slot(w, 1));
  g.link(PortGraph::slot(v, 2), PortGraph::slot(w, 0));
  g.link(PortGraph::slot(w, 2), at(k - 1, NE));
  for (int p = 0; p < 3; ++p) {
    int s = PortGraph::slot(v, p);
    const StrandId e = p + 1;
    while (true) {
      const int m = g.mate(s);
      g.set_label(s, e);
      g.set_label(m, e);
      const int n = PortGraph::node_of(m);
      if (g.is_vertex(n)) break;
      s = PortGraph::slot(n, (PortGraph::port_of(m) + 2) % 4);
    }
  }
  g.source = v;
  g.orient_from_source();
  return g.to_diagram("T(" + std::to_string(k) + ")");
}

Diagram catalog(std::string_view name) {
  if (name == "trivial") return parse_diagram(kTrivial);
  if (name == "theta_3_1") return parse_diagram(kTheta31);
  if (name == "theta_5_1") return parse_diagram(kTheta51);
  if (name.size() >= 4 && name.substr(0, 2) == "T(" && name.back() == ')') {
    const auto digits = name.substr(2, name.size() - 3);
    int k = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      throw Error(ErrorCode::bad_parameter, "bad T-family parameter '" + std::string(digits) + "'");
    return twist_family(k);
  }
  throw Error(ErrorCode::unknown_name, "no catalog diagram named '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  return {"trivial", "theta_3_1", "theta_5_1", "T(1)", "T(3)", "T(5)", "T(7)", "T(9)"};
}

}  // namespace thetapoly
