#include "random_diagram.hpp"

#include "port_graph.hpp"

namespace thetapoly::testing {

namespace {

// Pushes the arc of dart s1 over (or under) the arc of dart s2; both darts
// border the same face, so the result stays planar.
void finger(PortGraph& g, int s1, int s2, bool over) {
  const int m1 = g.mate(s1);
  const int m2 = g.mate(s2);
  const int p = g.add_node(4);
  const int q = g.add_node(4);
  enum { E = 0, N = 1, W = 2, S = 3 };
  g.link(PortGraph::slot(p, E), m2);
  g.link(PortGraph::slot(p, S), s1);
  g.link(PortGraph::slot(p, N), PortGraph::slot(q, N));
  g.link(PortGraph::slot(p, W), PortGraph::slot(q, E));
  g.link(PortGraph::slot(q, W), s2);
  g.link(PortGraph::slot(q, S), m1);
  if (!over) {
    g.rotate(p, 1);
    g.rotate(q, 1);
  }
}

void relabel(PortGraph& g) {
  for (int p = 0; p < 3; ++p) {
    int s = PortGraph::slot(g.source, p);
    while (true) {
      const int m = g.mate(s);
      g.set_label(s, p + 1);
      g.set_label(m, p + 1);
      const int n = PortGraph::node_of(m);
      if (g.is_vertex(n)) break;
      s = PortGraph::slot(n, (PortGraph::port_of(m) + 2) % 4);
    }
  }
  g.orient_from_source();
}

}  // namespace

Diagram random_theta(std::mt19937_64& rng, int max_fingers) {
  PortGraph g(catalog("trivial"));
  const int fingers = max_fingers > 0 ? 1 + static_cast<int>(rng() % static_cast<unsigned>(max_fingers)) : 0;
  for (int f = 0; f < fingers; ++f) {
    const auto faces = g.faces();
    const auto& face = faces[rng() % faces.size()];
    if (face.size() < 2) continue;
    const int i = static_cast<int>(rng() % face.size());
    const int j = static_cast<int>(rng() % face.size());
    const int s1 = face[static_cast<std::size_t>(i)];
    const int s2 = face[static_cast<std::size_t>(j)];
    if (i == j || s1 == g.mate(s2)) continue;
    finger(g, s1, s2, rng() % 2 == 0);
  }
  relabel(g);
  for (int n = 0; n < g.node_count(); ++n)
    if (g.is_crossing(n) && rng() % 2) g.rotate(n, 1);
  relabel(g);
  return g.to_diagram("random");
}

Diagram random_theta_nonempty(std::mt19937_64& rng, int max_fingers) {
  while (true) {
    Diagram d = random_theta(rng, max_fingers);
    if (d.crossing_count() > 0) return d;
  }
}

}  // namespace thetapoly::testing
