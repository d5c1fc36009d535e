#include <optional>

#include "diagram.hpp"
#include "error.hpp"
#include "port_graph.hpp"

namespace thetapoly {

const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::kink: return "kink";
    case MoveKind::bigon: return "bigon";
    case MoveKind::vertex_twist: return "vertex_twist";
    case MoveKind::vertex_slide: return "vertex_slide";
    case MoveKind::split_circle: return "split_circle";
  }
  return "?";
}

std::string MoveRecord::describe() const {
  std::string s = move_kind_name(kind);
  if (kind == MoveKind::kink || kind == MoveKind::vertex_twist) {
    s += sign > 0 ? " +1" : sign < 0 ? " -1" : " 0";
    s += a_paired ? " A" : " B";
  }
  if (strand != 0) s += strand > 0 ? " E" + std::to_string(strand) : " C" + std::to_string(-strand);
  return s;
}

namespace {

using Pairs = std::array<std::pair<int, int>, 2>;

Pairs pass_through(int p) { return {{{p, (p + 2) % 4}, {(p + 1) % 4, (p + 3) % 4}}}; }

std::optional<MoveRecord> remove_kink(PortGraph& g) {
  for (int n = 0; n < g.node_count(); ++n) {
    if (!g.is_crossing(n)) continue;
    for (int p = 0; p < 4; ++p) {
      if (g.mate(PortGraph::slot(n, p)) != PortGraph::slot(n, (p + 1) % 4)) continue;
      MoveRecord rec{MoveKind::kink, g.sign(n), p % 2 == 0, g.label(PortGraph::slot(n, p))};
      g.splice(n, pass_through(p));
      return rec;
    }
  }
  return std::nullopt;
}

bool on_nodes(const PortGraph& g, int s, std::initializer_list<int> nodes) {
  const int n = PortGraph::node_of(s);
  for (int m : nodes)
    if (n == m) return true;
  (void)g;
  return false;
}

std::optional<MoveRecord> remove_vertex_twist(PortGraph& g) {
  for (const auto& face : g.faces()) {
    if (face.size() != 2) continue;
    int s0 = face[0];
    int s1 = face[1];
    if (g.is_crossing(PortGraph::node_of(s0))) std::swap(s0, s1);
    const int v = PortGraph::node_of(s0);
    const int c = PortGraph::node_of(g.mate(s0));
    if (!g.is_vertex(v) || !g.is_crossing(c)) continue;
    const int pv = PortGraph::port_of(s0);
    const int q = PortGraph::port_of(g.mate(s0));
    const int vs_a = s0;                            // v.P   -> c.q
    const int vs_b = g.mate(s1);                    // v.P-1 -> c.q+1
    if (PortGraph::node_of(vs_b) != v || PortGraph::port_of(vs_b) != (pv + 2) % 3) continue;
    const int x = g.mate(PortGraph::slot(c, (q + 2) % 4));
    const int y = g.mate(PortGraph::slot(c, (q + 3) % 4));
    if (on_nodes(g, x, {v, c}) || on_nodes(g, y, {v, c})) continue;

    MoveRecord rec{MoveKind::vertex_twist, g.sign(c), q % 2 == 0, 0};
    g.splice(c, pass_through(q));
    const StrandId la = g.label(vs_a);
    const StrandId lb = g.label(vs_b);
    g.link(vs_a, y);
    g.link(vs_b, x);
    g.set_label(vs_a, lb);
    g.set_label(vs_b, la);
    return rec;
  }
  return std::nullopt;
}

std::optional<MoveRecord> remove_bigon(PortGraph& g) {
  for (const auto& face : g.faces()) {
    if (face.size() != 2) continue;
    const int c1 = PortGraph::node_of(face[0]);
    const int c2 = PortGraph::node_of(face[1]);
    if (c1 == c2 || !g.is_crossing(c1) || !g.is_crossing(c2)) continue;
    const int p1 = PortGraph::port_of(face[0]);
    const int q1 = PortGraph::port_of(g.mate(face[0]));
    if ((p1 % 2) != (q1 % 2)) continue;
    g.splice(c1, pass_through(p1));
    g.splice(c2, pass_through(q1));
    return MoveRecord{MoveKind::bigon, 0, false, 0};
  }
  return std::nullopt;
}

std::optional<MoveRecord> slide_past_vertex(PortGraph& g) {
  for (const auto& face : g.faces()) {
    if (face.size() != 3) continue;
    std::size_t at = 3;
    for (std::size_t i = 0; i < 3; ++i)
      if (g.is_vertex(PortGraph::node_of(face[i]))) at = i;
    if (at == 3) continue;
    const int s0 = face[at];
    const int s1 = face[(at + 1) % 3];
    const int s2 = face[(at + 2) % 3];
    const int v = PortGraph::node_of(s0);
    const int c1 = PortGraph::node_of(s1);
    const int c2 = PortGraph::node_of(s2);
    if (!g.is_crossing(c1) || !g.is_crossing(c2) || c1 == c2) continue;

    const int p2 = PortGraph::port_of(s0);
    const int p1 = PortGraph::port_of(g.mate(s2));
    const int p3 = (p2 + 1) % 3;
    if (PortGraph::node_of(g.mate(s2)) != v || p2 != (p1 + 1) % 3) continue;
    const int i = PortGraph::port_of(g.mate(s0));
    const int k1 = PortGraph::port_of(s1);
    const int k2 = PortGraph::port_of(g.mate(s1));
    const int j = PortGraph::port_of(s2);
    if ((k1 % 2) != (k2 % 2)) continue;
    const bool strand_over = k1 % 2 == 1;

    const int x1 = g.mate(PortGraph::slot(c1, (i + 2) % 4));
    const int x2 = g.mate(PortGraph::slot(c2, (j + 2) % 4));
    const int sa = g.mate(PortGraph::slot(c1, (k1 + 2) % 4));
    const int sb = g.mate(PortGraph::slot(c2, (k2 + 2) % 4));
    const int gs = g.mate(PortGraph::slot(v, p3));
    bool blocked = false;
    for (int s : {x1, x2, sa, sb, gs}) blocked = blocked || on_nodes(g, s, {v, c1, c2});
    if (blocked) continue;

    const StrandId edge3 = g.label(PortGraph::slot(v, p3));
    const int n = g.add_node(4);
    // near -> v.P3, far -> the old partner of v.P3
    std::array<int, 4> targets = strand_over ? std::array<int, 4>{PortGraph::slot(v, p3), sa, gs, sb}
                                             : std::array<int, 4>{sa, gs, sb, PortGraph::slot(v, p3)};
    g.kill(c1);
    g.kill(c2);
    g.link(PortGraph::slot(v, p2), x1);
    g.link(PortGraph::slot(v, p1), x2);
    for (int p = 0; p < 4; ++p) {
      const int s = PortGraph::slot(n, p);
      const int t = targets[static_cast<std::size_t>(p)];
      g.link(s, t);
      g.set_out(s, !g.out(t));
      g.set_label(s, g.label(t));
    }
    return MoveRecord{MoveKind::vertex_slide, 0, false, edge3};
  }
  return std::nullopt;
}

}  // namespace

Simplified simplify(const Diagram& d) {
  PortGraph g(d);
  Simplified out;
  while (true) {
    std::optional<MoveRecord> rec = remove_kink(g);
    if (!rec) rec = remove_vertex_twist(g);
    if (!rec) rec = remove_bigon(g);
    if (!rec) rec = slide_past_vertex(g);
    if (!rec) break;
    out.log.push_back(*rec);
  }
  for (int i = 0; i < g.free_circles; ++i) out.log.push_back(MoveRecord{MoveKind::split_circle, 0, false, 0});
  g.free_circles = 0;
  out.diagram = g.to_diagram(d.name());
  return out;
}

}  // namespace thetapoly
