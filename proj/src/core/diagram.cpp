#include "diagram.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "error.hpp"
#include "port_graph.hpp"

namespace thetapoly {

StrandId Diagram::strand_of(int arc) const {
  const auto it = strand_of_arc_.find(arc);
  if (it == strand_of_arc_.end()) throw Error(ErrorCode::invalid_argument, "unknown arc " + std::to_string(arc));
  return it->second;
}

int Diagram::circle_count() const {
  std::set<StrandId> circles;
  for (const auto& [arc, st] : strand_of_arc_)
    if (st < 0) circles.insert(st);
  return free_circles_ + static_cast<int>(circles.size());
}

bool Diagram::is_theta() const {
  if (!oriented_ || vertices_.size() != 2 || circle_count() != 0) return false;
  std::set<StrandId> edges;
  for (const auto& [arc, st] : strand_of_arc_) edges.insert(st);
  return edges == std::set<StrandId>{1, 2, 3};
}

Diagram Diagram::renamed(std::string name) const {
  Diagram d = *this;
  d.name_ = std::move(name);
  return d;
}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::string cleaned(line);
  for (char& ch : cleaned)
    if (ch == '(' || ch == ')' || ch == ',' || ch == '\t' || ch == '\r') ch = ' ';
  std::istringstream in(cleaned);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_arc(const std::string& tok, int line_no) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || v <= 0 || v > 1000000000L)
    throw Error(ErrorCode::parse, "line " + std::to_string(line_no) + ": bad arc label '" + tok + "'");
  return static_cast<int>(v);
}

std::string edge_name(StrandId st) {
  return st > 0 ? "E" + std::to_string(st) : "C" + std::to_string(-st);
}

}  // namespace

Diagram parse_diagram(std::string_view text) {
  std::string name = "unnamed";
  std::vector<VertexRec> verts;
  std::vector<CrossingRec> xs;
  std::map<int, StrandId> edges;
  int source_index = 1;
  bool saw_source = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const auto toks = tokenize(raw);
    if (toks.empty()) continue;
    const std::string& key = toks[0];
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (key == "theta") {
      if (toks.size() < 2) throw Error(ErrorCode::parse, where + "theta needs a name");
      name = toks[1];
      for (std::size_t i = 2; i < toks.size(); ++i) name += " " + toks[i];
    } else if (key == "V") {
      if (toks.size() != 4) throw Error(ErrorCode::parse, where + "V needs 3 arc labels");
      VertexRec v;
      for (int i = 0; i < 3; ++i) v.arcs[static_cast<std::size_t>(i)] = parse_arc(toks[static_cast<std::size_t>(i) + 1], line_no);
      verts.push_back(v);
    } else if (key == "X") {
      if (toks.size() != 5) throw Error(ErrorCode::parse, where + "X needs 4 arc labels");
      CrossingRec x;
      for (int i = 0; i < 4; ++i) x.arcs[static_cast<std::size_t>(i)] = parse_arc(toks[static_cast<std::size_t>(i) + 1], line_no);
      xs.push_back(x);
    } else if (key == "edge") {
      if (toks.size() != 3) throw Error(ErrorCode::parse, where + "edge needs an arc and E1|E2|E3");
      const int arc = parse_arc(toks[1], line_no);
      StrandId st = 0;
      if (toks[2] == "E1") st = 1;
      else if (toks[2] == "E2") st = 2;
      else if (toks[2] == "E3") st = 3;
      else throw Error(ErrorCode::parse, where + "edge identity must be E1, E2 or E3, got '" + toks[2] + "'");
      if (!edges.emplace(arc, st).second) throw Error(ErrorCode::parse, where + "arc " + toks[1] + " has two edge lines");
    } else if (key == "source") {
      if (toks.size() != 2 || (toks[1] != "1" && toks[1] != "2"))
        throw Error(ErrorCode::parse, where + "source must be 1 or 2");
      if (saw_source) throw Error(ErrorCode::parse, where + "duplicate source line");
      saw_source = true;
      source_index = toks[1] == "1" ? 1 : 2;
    } else {
      throw Error(ErrorCode::parse, where + "unknown record '" + key + "'");
    }
  }

  if (verts.size() != 2)
    throw Error(ErrorCode::validation, "expected exactly 2 vertices, found " + std::to_string(verts.size()));
  if (source_index == 2) std::swap(verts[0], verts[1]);

  std::set<int> arcs;
  for (const auto& v : verts) arcs.insert(v.arcs.begin(), v.arcs.end());
  for (const auto& x : xs) arcs.insert(x.arcs.begin(), x.arcs.end());
  for (int a : arcs)
    if (!edges.count(a)) throw Error(ErrorCode::validation, "arc " + std::to_string(a) + " has no edge line");
  for (const auto& [a, st] : edges)
    if (!arcs.count(a)) throw Error(ErrorCode::validation, "edge line names arc " + std::to_string(a) + " which is not used");

  PortGraph g = PortGraph::from_records(verts, xs, edges);
  g.orient_from_source();
  if (!g.planar()) throw Error(ErrorCode::validation, "rotation system is not planar");
  return g.to_diagram(name);
}

std::string render_diagram(const Diagram& d) {
  std::ostringstream out;
  out << "theta " << (d.name().empty() ? "unnamed" : d.name()) << '\n';
  for (const auto& v : d.vertices()) out << "V " << v.arcs[0] << ' ' << v.arcs[1] << ' ' << v.arcs[2] << '\n';
  for (const auto& x : d.crossings())
    out << "X " << x.arcs[0] << ' ' << x.arcs[1] << ' ' << x.arcs[2] << ' ' << x.arcs[3] << '\n';
  for (const auto& [arc, st] : d.strand_of_arc()) out << "edge " << arc << ' ' << edge_name(st) << '\n';
  // Extensions for intermediate diagrams; parse_diagram rejects them.
  if (d.free_circles() > 0) out << "circles " << d.free_circles() << '\n';
  if (!d.oriented()) out << "unoriented\n";
  out << "source 1\n";
  return out.str();
}

void validate(const Diagram& d) {
  PortGraph g(d);
  if (d.vertices().size() != 2)
    throw Error(ErrorCode::validation, "expected exactly 2 vertices, found " + std::to_string(d.vertices().size()));
  if (!g.planar()) throw Error(ErrorCode::validation, "rotation system is not planar");
  if (!d.oriented()) return;
  g.check_coherent();
  for (int p = 0; p < 3; ++p) {
    int s = PortGraph::slot(0, p);
    while (true) {
      const int m = g.mate(s);
      const int n = PortGraph::node_of(m);
      if (g.is_vertex(n)) {
        if (n == 0) throw Error(ErrorCode::validation, "an edge returns to the source vertex (not a theta curve)");
        break;
      }
      s = PortGraph::slot(n, (PortGraph::port_of(m) + 2) % 4);
    }
  }
}

bool is_planar(const Diagram& d) { return PortGraph(d).planar(); }

int crossing_sign(const Diagram& d, std::size_t crossing) {
  if (crossing >= d.crossing_count())
    throw Error(ErrorCode::invalid_argument, "crossing index " + std::to_string(crossing) + " out of range");
  if (!d.oriented()) throw Error(ErrorCode::invalid_argument, "crossing sign needs an oriented diagram");
  return d.crossings()[crossing].sign;
}

CrossingKind classify_crossing(const Diagram& d, std::size_t crossing) {
  if (crossing >= d.crossing_count())
    throw Error(ErrorCode::invalid_argument, "crossing index " + std::to_string(crossing) + " out of range");
  const auto& x = d.crossings()[crossing];
  return d.strand_of(x.arcs[0]) == d.strand_of(x.arcs[1]) ? CrossingKind::self : CrossingKind::non_self;
}

WritheSums writhe_sums(const Diagram& d) {
  WritheSums w;
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const int s = d.crossings()[i].sign;
    if (classify_crossing(d, i) == CrossingKind::self) w.self += s;
    else w.non_self += s;
  }
  return w;
}

char sign_entry_char(SignEntry e) {
  switch (e) {
    case SignEntry::plus: return '+';
    case SignEntry::minus: return '-';
    case SignEntry::zero: return '0';
    case SignEntry::infinity: return 'i';
  }
  return '?';
}

std::string nsign_to_string(const NSign& eps) {
  std::string s;
  for (auto e : eps) s += sign_entry_char(e);
  return s;
}

NSign parse_nsign(std::string_view text) {
  NSign eps;
  auto entry = [](std::string_view tok) {
    if (tok == "+" || tok == "1" || tok == "+1") return SignEntry::plus;
    if (tok == "-" || tok == "-1") return SignEntry::minus;
    if (tok == "0") return SignEntry::zero;
    if (tok == "i" || tok == "inf" || tok == "∞") return SignEntry::infinity;
    throw Error(ErrorCode::parse, "bad n-sign entry '" + std::string(tok) + "'");
  };
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto comma = text.find(',', pos);
      auto tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      eps.push_back(entry(tok));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  } else {
    for (char ch : text) {
      if (ch == ' ') continue;
      eps.push_back(entry(std::string_view(&ch, 1)));
    }
  }
  return eps;
}

Diagram apply_nsign(const Diagram& d, const std::vector<std::size_t>& crossings, const NSign& eps,
                    bool allow_incoherent) {
  if (crossings.size() != eps.size())
    throw Error(ErrorCode::invalid_argument, "n-sign length " + std::to_string(eps.size()) + " does not match " +
                                                 std::to_string(crossings.size()) + " crossings");
  std::set<std::size_t> distinct(crossings.begin(), crossings.end());
  if (distinct.size() != crossings.size()) throw Error(ErrorCode::invalid_argument, "crossing set has repeats");
  if (crossings.empty()) return d;
  if (!d.oriented()) throw Error(ErrorCode::invalid_sign, "n-signs need an oriented diagram");

  PortGraph g(d);
  const int nv = static_cast<int>(d.vertices().size());
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const std::size_t c = crossings[i];
    if (c >= d.crossing_count())
      throw Error(ErrorCode::invalid_argument, "crossing index " + std::to_string(c) + " out of range");
    const int node = nv + static_cast<int>(c);
    const int sign = d.crossings()[c].sign;
    switch (eps[i]) {
      case SignEntry::plus:
        if (sign < 0) g.rotate(node, 1);
        break;
      case SignEntry::minus:
        if (sign > 0) g.rotate(node, 1);
        break;
      case SignEntry::zero:
        g.splice(node, g.coherent_pairs(node));
        break;
      case SignEntry::infinity:
        if (!allow_incoherent)
          throw Error(ErrorCode::invalid_sign, "incoherent smoothing not allowed at crossing " + std::to_string(c));
        g.splice(node, g.incoherent_pairs(node));
        break;
    }
  }
  return g.to_diagram(d.name());
}

Diagram mirror(const Diagram& d) {
  PortGraph g(d);
  for (int n = 0; n < g.node_count(); ++n)
    if (g.is_crossing(n)) g.rotate(n, 1);
  return g.to_diagram(d.name().empty() ? d.name() : "mirror(" + d.name() + ")");
}

namespace {

// Reflects the projection plane and switches every crossing. The two
// reflections compose to a rotation of space, so the curve is unchanged.
PortGraph flipped(const PortGraph& g) {
  PortGraph h;
  for (int n = 0; n < g.node_count(); ++n) h.add_node(g.degree(n));
  auto image = [&](int s) {
    const int n = PortGraph::node_of(s);
    const int deg = g.degree(n);
    return PortGraph::slot(n, (deg - PortGraph::port_of(s)) % deg);
  };
  for (int n = 0; n < g.node_count(); ++n)
    for (int p = 0; p < g.degree(n); ++p) {
      const int s = PortGraph::slot(n, p);
      h.link(image(s), image(g.mate(s)));
      h.set_out(image(s), g.out(s));
      h.set_label(image(s), g.label(s));
    }
  h.free_circles = g.free_circles;
  h.oriented = g.oriented;
  h.source = g.source;
  for (int n = 0; n < h.node_count(); ++n)
    if (h.is_crossing(n)) h.rotate(n, 1);
  return h;
}

}  // namespace

SpliceResult connected_sum_mapped(const Diagram& left, const Diagram& right) {
  if (!left.is_theta() || !right.is_theta())
    throw Error(ErrorCode::invalid_argument, "connected sum needs two theta-curve diagrams without circles");

  auto attempt = [&](bool flip_right) {
    PortGraph a(left);
    PortGraph b = flip_right ? flipped(PortGraph(right)) : PortGraph(right);
    const int offset = a.node_count();
    PortGraph g = a;
    for (int n = 0; n < b.node_count(); ++n) g.add_node(b.degree(n));
    for (int n = 0; n < b.node_count(); ++n)
      for (int p = 0; p < b.degree(n); ++p) {
        const int s = PortGraph::slot(n, p);
        const int gs = PortGraph::slot(n + offset, p);
        const int m = b.mate(s);
        g.link(gs, PortGraph::slot(PortGraph::node_of(m) + offset, PortGraph::port_of(m)));
        g.set_out(gs, b.out(s));
        g.set_label(gs, b.label(s));
      }
    const int sink = 1;
    const int src = offset + 0;
    for (StrandId e = 1; e <= 3; ++e) {
      int ws = -1;
      int vs = -1;
      for (int p = 0; p < 3; ++p) {
        if (g.label(PortGraph::slot(sink, p)) == e) ws = PortGraph::slot(sink, p);
        if (g.label(PortGraph::slot(src, p)) == e) vs = PortGraph::slot(src, p);
      }
      const int x = g.mate(ws);
      const int y = g.mate(vs);
      g.link(x, y);
    }
    g.kill(sink);
    g.kill(src);
    return g;
  };

  PortGraph g = attempt(false);
  if (!g.planar()) g = attempt(true);
  if (!g.planar()) throw Error(ErrorCode::validation, "connected sum produced a non-planar rotation system");

  std::vector<int> node_map;
  SpliceResult r;
  const std::string name = left.name() + "#" + right.name();
  r.diagram = g.to_diagram(name, &node_map);
  const std::size_t lv = left.vertices().size();
  const std::size_t offset = lv + left.crossing_count() + right.vertices().size();
  for (std::size_t i = 0; i < left.crossing_count(); ++i)
    r.left_crossings.push_back(static_cast<std::size_t>(node_map[lv + i]));
  for (std::size_t i = 0; i < right.crossing_count(); ++i)
    r.right_crossings.push_back(static_cast<std::size_t>(node_map[offset + i]));
  return r;
}

Diagram connected_sum(const Diagram& left, const Diagram& right) { return connected_sum_mapped(left, right).diagram; }

std::vector<CrossingVisit> traversal_visits(const Diagram& d, std::array<int, 3> edge_order) {
  PortGraph g(d);
  const int nv = static_cast<int>(d.vertices().size());
  std::vector<CrossingVisit> visits(d.crossing_count());
  std::vector<char> seen(d.crossing_count(), 0);
  std::vector<char> slot_done(static_cast<std::size_t>(g.node_count()) * 4, 0);
  std::vector<int> order;
  int clock = 0;

  auto walk = [&](int start) {
    int s = start;
    while (true) {
      const int m = g.mate(s);
      slot_done[static_cast<std::size_t>(s)] = 1;
      slot_done[static_cast<std::size_t>(m)] = 1;
      const int n = PortGraph::node_of(m);
      if (g.is_vertex(n)) break;
      const std::size_t c = static_cast<std::size_t>(n - nv);
      if (!seen[c]) {
        seen[c] = 1;
        visits[c].first_visit = clock;
        visits[c].first_on_under = PortGraph::port_of(m) % 2 == 0;
        order.push_back(n);
      }
      ++clock;
      s = PortGraph::slot(n, (PortGraph::port_of(m) + 2) % 4);
      if (s == start) break;
    }
  };

  if (nv > 0) {
    for (int e : edge_order)
      for (int p = 0; p < 3; ++p) {
        const int s = PortGraph::slot(0, p);
        if (g.label(s) == e && !slot_done[static_cast<std::size_t>(s)]) walk(s);
      }
    for (int v = 0; v < nv; ++v)
      for (int p = 0; p < 3; ++p)
        if (!slot_done[static_cast<std::size_t>(PortGraph::slot(v, p))]) walk(PortGraph::slot(v, p));
  }

  auto drain = [&](int n) {
    while (true) {
      std::vector<int> outs;
      for (int p = 0; p < 4; ++p) {
        const int s = PortGraph::slot(n, p);
        if (!slot_done[static_cast<std::size_t>(s)] && (!g.oriented || g.out(s))) outs.push_back(p);
      }
      if (outs.empty()) return;
      int start = outs.front();
      if (outs.size() == 2 && g.oriented) start = (outs[1] == (outs[0] + 1) % 4) ? outs[0] : outs[1];
      if (!seen[static_cast<std::size_t>(n - nv)]) {
        seen[static_cast<std::size_t>(n - nv)] = 1;
        visits[static_cast<std::size_t>(n - nv)].first_visit = clock;
        // The circle starts by leaving this crossing; its first pass is the
        // strand through the start port.
        visits[static_cast<std::size_t>(n - nv)].first_on_under = start % 2 == 0;
        order.push_back(n);
        ++clock;
      }
      walk(PortGraph::slot(n, start));
    }
  };
  for (std::size_t i = 0; i < order.size(); ++i) drain(order[i]);
  for (int n = nv; n < g.node_count(); ++n) {
    if (seen[static_cast<std::size_t>(n - nv)]) continue;
    drain(n);
    for (std::size_t i = 0; i < order.size(); ++i) drain(order[i]);
  }
  return visits;
}

}  // namespace thetapoly
