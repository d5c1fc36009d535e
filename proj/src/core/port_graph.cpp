#include "port_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "error.hpp"

namespace thetapoly {

PortGraph PortGraph::from_records(const std::vector<VertexRec>& verts, const std::vector<CrossingRec>& xs,
                                  const std::map<int, StrandId>& strand_of) {
  PortGraph g;
  for (std::size_t i = 0; i < verts.size(); ++i) g.add_node(3);
  for (std::size_t i = 0; i < xs.size(); ++i) g.add_node(4);
  g.source = verts.empty() ? -1 : 0;
  g.oriented = false;

  std::map<int, std::vector<int>> ends;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (int p = 0; p < 3; ++p) ends[verts[i].arcs[static_cast<std::size_t>(p)]].push_back(slot(static_cast<int>(i), p));
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const int n = static_cast<int>(verts.size() + j);
    for (int p = 0; p < 4; ++p) ends[xs[j].arcs[static_cast<std::size_t>(p)]].push_back(slot(n, p));
  }
  for (const auto& [arc, slots] : ends) {
    if (slots.size() != 2)
      throw Error(ErrorCode::validation,
                  "arc " + std::to_string(arc) + " appears " + std::to_string(slots.size()) + " times (expected 2)");
    g.link(slots[0], slots[1]);
    const auto it = strand_of.find(arc);
    const StrandId st = it == strand_of.end() ? 0 : it->second;
    g.set_label(slots[0], st);
    g.set_label(slots[1], st);
  }
  return g;
}

PortGraph::PortGraph(const Diagram& d) {
  *this = from_records(d.vertices(), d.crossings(), d.strand_of_arc());
  const auto& verts = d.vertices();
  const auto& xs = d.crossings();
  free_circles = d.free_circles();
  oriented = d.oriented();

  if (oriented) {
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (int p = 0; p < 3; ++p) set_out(slot(static_cast<int>(i), p), i == 0);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      const int n = static_cast<int>(verts.size() + j);
      const int sg = xs[j].sign;
      if (sg == 0) {
        oriented = false;
        break;
      }
      set_out(slot(n, 0), false);
      set_out(slot(n, 2), true);
      set_out(slot(n, 3), sg < 0);
      set_out(slot(n, 1), sg > 0);
    }
  }
}

int PortGraph::crossing_count() const {
  int c = 0;
  for (int n = 0; n < node_count(); ++n) c += is_crossing(n) ? 1 : 0;
  return c;
}

int PortGraph::add_node(int deg) {
  degree_.push_back(deg);
  for (int p = 0; p < 4; ++p) {
    mate_.push_back(-1);
    out_.push_back(-1);
    label_.push_back(0);
  }
  return node_count() - 1;
}

void PortGraph::kill(int node) {
  degree_[static_cast<std::size_t>(node)] = 0;
  for (int p = 0; p < 4; ++p) mate_[static_cast<std::size_t>(slot(node, p))] = -1;
}

void PortGraph::link(int a, int b) {
  mate_[static_cast<std::size_t>(a)] = b;
  mate_[static_cast<std::size_t>(b)] = a;
}

void PortGraph::splice(int node, const std::array<std::pair<int, int>, 2>& pairs) {
  for (const auto& [p, q] : pairs) {
    const int sp = slot(node, p);
    const int sq = slot(node, q);
    const int x = mate(sp);
    const int y = mate(sq);
    if (x == sq) {
      ++free_circles;
      continue;
    }
    if (oriented && out(x) == out(y)) oriented = false;
    link(x, y);
    // Keep the strand identity flowing through the joined arc.
    if (label(y) == 0) set_label(y, label(x));
    if (label(x) == 0) set_label(x, label(y));
  }
  kill(node);
}

void PortGraph::rotate(int node, int shift) {
  const int deg = degree(node);
  std::array<int, 4> mates{};
  std::array<signed char, 4> outs{};
  std::array<StrandId, 4> labels{};
  for (int k = 0; k < deg; ++k) {
    const int old = slot(node, (k + shift) % deg);
    mates[static_cast<std::size_t>(k)] = mate(old);
    outs[static_cast<std::size_t>(k)] = out_[static_cast<std::size_t>(old)];
    labels[static_cast<std::size_t>(k)] = label(old);
  }
  // Partners inside the same node need their targets remapped too.
  auto remap = [&](int s) {
    if (node_of(s) != node) return s;
    const int old_port = port_of(s);
    return slot(node, ((old_port - shift) % deg + deg) % deg);
  };
  for (int k = 0; k < deg; ++k) {
    const int s = slot(node, k);
    out_[static_cast<std::size_t>(s)] = outs[static_cast<std::size_t>(k)];
    label_[static_cast<std::size_t>(s)] = labels[static_cast<std::size_t>(k)];
  }
  for (int k = 0; k < deg; ++k) {
    const int target = remap(mates[static_cast<std::size_t>(k)]);
    mate_[static_cast<std::size_t>(slot(node, k))] = target;
    mate_[static_cast<std::size_t>(target)] = slot(node, k);
  }
}

int PortGraph::sign(int node) const {
  if (!oriented) return 0;
  const int under_in = out(slot(node, 0)) ? 2 : 0;
  const int over_in = out(slot(node, 1)) ? 3 : 1;
  return ((over_in - under_in + 4) % 4 == 3) ? 1 : -1;
}

std::array<std::pair<int, int>, 2> PortGraph::coherent_pairs(int node) const {
  const int u_in = out(slot(node, 0)) ? 2 : 0;
  const int o_in = out(slot(node, 1)) ? 3 : 1;
  const int u_out = (u_in + 2) % 4;
  const int o_out = (o_in + 2) % 4;
  return {{{u_in, o_out}, {o_in, u_out}}};
}

std::array<std::pair<int, int>, 2> PortGraph::incoherent_pairs(int node) const {
  const int u_in = out(slot(node, 0)) ? 2 : 0;
  const int o_in = out(slot(node, 1)) ? 3 : 1;
  return {{{u_in, o_in}, {(u_in + 2) % 4, (o_in + 2) % 4}}};
}

std::vector<std::vector<int>> PortGraph::faces() const {
  std::vector<std::vector<int>> result;
  std::vector<char> seen(mate_.size(), 0);
  for (int n = 0; n < node_count(); ++n) {
    if (!alive(n)) continue;
    for (int p = 0; p < degree(n); ++p) {
      const int start = slot(n, p);
      if (seen[static_cast<std::size_t>(start)]) continue;
      std::vector<int> face;
      int s = start;
      do {
        seen[static_cast<std::size_t>(s)] = 1;
        face.push_back(s);
        s = ccw_next(mate(s));
      } while (s != start);
      result.push_back(std::move(face));
    }
  }
  return result;
}

bool PortGraph::planar() const {
  const int nn = node_count();
  std::vector<int> parent(static_cast<std::size_t>(nn));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (int n = 0; n < nn; ++n) {
    if (!alive(n)) continue;
    for (int p = 0; p < degree(n); ++p) {
      const int m = mate(slot(n, p));
      if (m < 0) return false;
      parent[static_cast<std::size_t>(find(n))] = find(node_of(m));
    }
  }
  // 2V - sum(deg) + 2F = 2(V - E + F) per component
  std::map<int, long> twice;
  for (int n = 0; n < nn; ++n) {
    if (!alive(n)) continue;
    twice[find(n)] += 2 - degree(n);
  }
  for (const auto& f : faces()) twice[find(node_of(f.front()))] += 2;
  return std::all_of(twice.begin(), twice.end(), [](const auto& kv) { return kv.second == 4; });
}

void PortGraph::orient_from_source() {
  if (source < 0) throw Error(ErrorCode::validation, "diagram has no source vertex");
  std::set<StrandId> seen_labels;
  for (int p = 0; p < 3; ++p) {
    int s = slot(source, p);
    const StrandId edge = label(s);
    if (edge != 0 && !seen_labels.insert(edge).second)
      throw Error(ErrorCode::validation, "two edges at the source vertex carry the label E" + std::to_string(edge));
    std::size_t guard = 0;
    while (true) {
      const int m = mate(s);
      if (label(s) != edge || label(m) != edge)
        throw Error(ErrorCode::validation, "edge labels change along edge E" + std::to_string(edge));
      set_out(s, true);
      set_out(m, false);
      const int n = node_of(m);
      if (is_vertex(n)) {
        if (n == source) throw Error(ErrorCode::validation, "an edge returns to the source vertex (not a theta curve)");
        break;
      }
      s = slot(n, (port_of(m) + 2) % 4);
      if (++guard > mate_.size()) throw Error(ErrorCode::validation, "edge walk from the source does not terminate");
    }
  }
  for (int n = 0; n < node_count(); ++n) {
    if (!alive(n)) continue;
    for (int p = 0; p < degree(n); ++p)
      if (out_[static_cast<std::size_t>(slot(n, p))] < 0)
        throw Error(ErrorCode::validation, "diagram has components not reachable from the source vertex");
  }
  for (int n = 0; n < node_count(); ++n) {
    if (!is_vertex(n) || n == source) continue;
    for (int p = 0; p < 3; ++p)
      if (out(slot(n, p))) throw Error(ErrorCode::validation, "incoherent edge structure at the sink vertex");
  }
  oriented = true;
}

void PortGraph::check_coherent() const {
  for (int n = 0; n < node_count(); ++n) {
    if (!alive(n)) continue;
    for (int p = 0; p < degree(n); ++p) {
      const int s = slot(n, p);
      if (out(s) == out(mate(s))) throw Error(ErrorCode::validation, "orientation is not coherent along an arc");
    }
    if (is_crossing(n) && out(slot(n, 0)) == out(slot(n, 2)))
      throw Error(ErrorCode::validation, "crossing strand orientation is inconsistent");
  }
}

Diagram PortGraph::to_diagram(std::string name, std::vector<int>* node_to_crossing) const {
  if (oriented) check_coherent();
  const std::size_t nslots = mate_.size();
  std::vector<int> arc_id(nslots, -1);
  std::vector<int> cidx(static_cast<std::size_t>(node_count()), -1);
  std::vector<int> corder;
  std::map<int, StrandId> strand_of;
  int next_arc = 1;

  auto walk = [&](int start, StrandId strand) {
    int s = start;
    while (true) {
      const int m = mate(s);
      const int arc = next_arc++;
      arc_id[static_cast<std::size_t>(s)] = arc;
      arc_id[static_cast<std::size_t>(m)] = arc;
      strand_of[arc] = strand;
      const int n = node_of(m);
      if (is_vertex(n)) break;
      if (cidx[static_cast<std::size_t>(n)] < 0) {
        cidx[static_cast<std::size_t>(n)] = static_cast<int>(corder.size());
        corder.push_back(n);
      }
      s = slot(n, (port_of(m) + 2) % 4);
      if (s == start) break;
    }
  };

  std::vector<int> vorder;
  if (source >= 0 && alive(source)) vorder.push_back(source);
  for (int n = 0; n < node_count(); ++n)
    if (is_vertex(n) && n != source) vorder.push_back(n);

  std::set<StrandId> used;
  auto pick_label = [&](StrandId wanted) {
    StrandId l = wanted;
    if (l < 1 || l > 3 || used.count(l)) {
      l = 1;
      while (used.count(l)) ++l;
    }
    used.insert(l);
    return l;
  };

  if (!vorder.empty()) {
    const int src = vorder.front();
    std::array<int, 3> ports{0, 1, 2};
    std::stable_sort(ports.begin(), ports.end(),
                     [&](int a, int b) { return label(slot(src, a)) < label(slot(src, b)); });
    for (int p : ports) {
      const int s = slot(src, p);
      if (arc_id[static_cast<std::size_t>(s)] >= 0) continue;
      walk(s, pick_label(label(s)));
    }
  }
  for (int v : vorder)
    for (int p = 0; p < 3; ++p) {
      const int s = slot(v, p);
      if (arc_id[static_cast<std::size_t>(s)] >= 0) continue;
      walk(s, pick_label(label(s)));
    }

  // Circle components: crossings already reached first, then the rest in node order.
  std::vector<int> pending;
  int circle = 0;
  auto start_circle_at = [&](int n) {
    while (true) {
      std::vector<int> free_slots;
      for (int p = 0; p < 4; ++p)
        if (arc_id[static_cast<std::size_t>(slot(n, p))] < 0) free_slots.push_back(p);
      if (free_slots.empty()) return;
      int start_port = free_slots.front();
      if (oriented) {
        std::vector<int> outs;
        for (int p : free_slots)
          if (out(slot(n, p))) outs.push_back(p);
        start_port = outs.front();
        if (outs.size() == 2) {
          // Counterclockwise-first of the two adjacent outgoing ports; independent of over/under.
          start_port = (outs[1] == (outs[0] + 1) % 4) ? outs[0] : outs[1];
        }
      }
      if (cidx[static_cast<std::size_t>(n)] < 0) {
        cidx[static_cast<std::size_t>(n)] = static_cast<int>(corder.size());
        corder.push_back(n);
      }
      walk(slot(n, start_port), -(++circle));
    }
  };
  for (std::size_t i = 0; i < corder.size(); ++i) start_circle_at(corder[i]);
  for (int n = 0; n < node_count(); ++n) {
    if (!is_crossing(n) || cidx[static_cast<std::size_t>(n)] >= 0) continue;
    start_circle_at(n);
    for (std::size_t i = 0; i < corder.size(); ++i) start_circle_at(corder[i]);
  }

  Diagram d;
  d.name_ = std::move(name);
  d.free_circles_ = free_circles;
  d.oriented_ = oriented;
  d.strand_of_arc_ = std::move(strand_of);
  for (int v : vorder) {
    std::array<int, 3> a{};
    for (int p = 0; p < 3; ++p) a[static_cast<std::size_t>(p)] = arc_id[static_cast<std::size_t>(slot(v, p))];
    std::rotate(a.begin(), std::min_element(a.begin(), a.end()), a.end());
    d.vertices_.push_back(VertexRec{a});
  }
  for (int n : corder) {
    std::array<int, 4> a{};
    for (int p = 0; p < 4; ++p) a[static_cast<std::size_t>(p)] = arc_id[static_cast<std::size_t>(slot(n, p))];
    CrossingRec rec;
    if (oriented) {
      const bool flip = out(slot(n, 0));
      if (flip) std::rotate(a.begin(), a.begin() + 2, a.end());
      rec.sign = sign(n);
    } else if (a[2] < a[0]) {
      std::rotate(a.begin(), a.begin() + 2, a.end());
    }
    rec.arcs = a;
    d.crossings_.push_back(rec);
  }
  if (node_to_crossing) {
    node_to_crossing->assign(static_cast<std::size_t>(node_count()), -1);
    for (std::size_t i = 0; i < corder.size(); ++i) (*node_to_crossing)[static_cast<std::size_t>(corder[i])] = static_cast<int>(i);
  }
  return d;
}

}  // namespace thetapoly
