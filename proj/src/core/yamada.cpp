#include "yamada.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>

#include "error.hpp"

namespace thetapoly {

namespace {

// ---- h polynomial -------------------------------------------------------

using Adjacency = std::vector<std::vector<int>>;

void refine(const Adjacency& m, std::vector<int>& color) {
  const int n = static_cast<int>(m.size());
  int classes = static_cast<int>(std::set<int>(color.begin(), color.end()).size());
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sig(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      std::vector<int> s{color[static_cast<std::size_t>(x)]};
      std::vector<std::pair<int, int>> nb;
      for (int y = 0; y < n; ++y)
        if (m[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] > 0)
          nb.emplace_back(color[static_cast<std::size_t>(y)], m[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
      std::sort(nb.begin(), nb.end());
      for (const auto& [c, k] : nb) {
        s.push_back(c);
        s.push_back(k);
      }
      sig[static_cast<std::size_t>(x)] = {std::move(s), x};
    }
    std::vector<std::vector<int>> distinct;
    for (const auto& [s, x] : sig) distinct.push_back(s);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (const auto& [s, x] : sig)
      color[static_cast<std::size_t>(x)] =
          static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), s) - distinct.begin());
    const int now = static_cast<int>(distinct.size());
    if (now == classes) return;
    classes = now;
  }
}

void canon_search(const Adjacency& m, std::vector<int> color, std::string& best, bool& have) {
  refine(m, color);
  const int n = static_cast<int>(m.size());
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  for (int c : color) ++count[static_cast<std::size_t>(c)];
  int target = -1;
  for (int c = 0; c < n; ++c)
    if (count[static_cast<std::size_t>(c)] > 1 &&
        (target < 0 || count[static_cast<std::size_t>(c)] < count[static_cast<std::size_t>(target)]))
      target = c;
  if (target < 0) {
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) order[static_cast<std::size_t>(color[static_cast<std::size_t>(x)])] = x;
    std::string key;
    key.reserve(static_cast<std::size_t>(n * n / 2 + 1));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        key.push_back(static_cast<char>(
            m[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])][static_cast<std::size_t>(order[static_cast<std::size_t>(j)])]));
    if (!have || key < best) {
      best = std::move(key);
      have = true;
    }
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (color[static_cast<std::size_t>(v)] != target) continue;
    std::vector<int> next(color.size());
    for (int x = 0; x < n; ++x) next[static_cast<std::size_t>(x)] = 2 * color[static_cast<std::size_t>(x)] + 1;
    next[static_cast<std::size_t>(v)] = 2 * color[static_cast<std::size_t>(v)];
    canon_search(m, std::move(next), best, have);
  }
}

std::string canonical_key(const Adjacency& m) {
  std::vector<int> color(m.size(), 0);
  for (std::size_t x = 0; x < m.size(); ++x) color[x] = std::accumulate(m[x].begin(), m[x].end(), 0);
  std::string best;
  bool have = false;
  canon_search(m, color, best, have);
  return std::string(1, static_cast<char>(m.size())) + best;
}

class HCache {
public:
  std::optional<LaurentPoly> find(const std::string& key) {
    std::lock_guard<std::mutex> lock(mu_);
    const auto it = memo_.find(key);
    if (it == memo_.end()) return std::nullopt;
    return it->second;
  }
  void put(const std::string& key, const LaurentPoly& value) {
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(key, value);
  }

private:
  std::mutex mu_;
  std::unordered_map<std::string, LaurentPoly> memo_;
};

HCache& h_cache() {
  static HCache cache;
  return cache;
}

LaurentPoly h_general(int n, const std::vector<std::pair<int, int>>& edges);

// Connected, loopless, at least one edge.
LaurentPoly h_connected(int n, const std::vector<std::pair<int, int>>& edges) {
  Adjacency m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (const auto& [u, v] : edges) {
    ++m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    ++m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
  }
  const std::string key = canonical_key(m);
  if (auto hit = h_cache().find(key)) return *hit;

  // Delete/contract an edge at a vertex of least degree.
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : edges) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  std::size_t pick = 0;
  for (std::size_t i = 1; i < edges.size(); ++i) {
    const auto& [u, v] = edges[i];
    const auto& [pu, pv] = edges[pick];
    if (std::min(deg[static_cast<std::size_t>(u)], deg[static_cast<std::size_t>(v)]) <
        std::min(deg[static_cast<std::size_t>(pu)], deg[static_cast<std::size_t>(pv)]))
      pick = i;
  }
  const auto [a, b] = edges[pick];
  std::vector<std::pair<int, int>> deleted;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (i != pick) deleted.push_back(edges[i]);
  // Contract b into a and close the gap left by b.
  std::vector<int> index(static_cast<std::size_t>(n));
  for (int x = 0, k = 0; x < n; ++x) index[static_cast<std::size_t>(x)] = x == b ? -1 : k++;
  index[static_cast<std::size_t>(b)] = index[static_cast<std::size_t>(a)];
  std::vector<std::pair<int, int>> contracted;
  for (const auto& [u, v] : deleted)
    contracted.emplace_back(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
  LaurentPoly result = h_general(n, deleted) + h_general(n - 1, contracted);
  h_cache().put(key, result);
  return result;
}

LaurentPoly h_general(int n, const std::vector<std::pair<int, int>>& edges) {
  LaurentPoly factor(1);
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
  };
  std::vector<std::pair<int, int>> plain;
  for (const auto& [u, v] : edges) {
    if (u == v) {
      factor *= -sigma();
    } else {
      plain.emplace_back(u, v);
      parent[static_cast<std::size_t>(find(u))] = find(v);
    }
  }
  std::map<int, std::vector<int>> comps;
  for (int x = 0; x < n; ++x) comps[find(x)].push_back(x);
  for (const auto& [root, members] : comps) {
    if (members.size() == 1) {
      factor *= mpz_class(-1);
      continue;
    }
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < members.size(); ++i) index[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> sub;
    for (const auto& [u, v] : plain)
      if (find(u) == root) sub.emplace_back(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
    factor *= h_connected(static_cast<int>(members.size()), sub);
  }
  return factor;
}

// ---- diagram incidence helpers -----------------------------------------

struct End {
  int node;
  int port;
};

// Nodes: vertices first, then crossings. ends[arc] lists both incidences.
struct Incidence {
  int vertex_count = 0;
  int node_count = 0;
  std::vector<int> degree;
  std::vector<std::array<int, 4>> arcs;  // per node, per port
  std::map<int, std::array<End, 2>> ends;
};

Incidence incidence(const Diagram& d) {
  Incidence inc;
  inc.vertex_count = static_cast<int>(d.vertices().size());
  for (const auto& v : d.vertices()) {
    inc.degree.push_back(3);
    inc.arcs.push_back({v.arcs[0], v.arcs[1], v.arcs[2], 0});
  }
  for (const auto& x : d.crossings()) {
    inc.degree.push_back(4);
    inc.arcs.push_back(x.arcs);
  }
  inc.node_count = static_cast<int>(inc.degree.size());
  std::map<int, int> seen;
  for (int n = 0; n < inc.node_count; ++n)
    for (int p = 0; p < inc.degree[static_cast<std::size_t>(n)]; ++p) {
      const int a = inc.arcs[static_cast<std::size_t>(n)][static_cast<std::size_t>(p)];
      inc.ends[a][static_cast<std::size_t>(seen[a]++)] = End{n, p};
    }
  return inc;
}

End other_end(const Incidence& inc, int arc, End here) {
  const auto& e = inc.ends.at(arc);
  if (e[0].node == here.node && e[0].port == here.port) return e[1];
  return e[0];
}

// Resolution of a crossing: A pairs ports (0,1),(2,3); B pairs (1,2),(3,0).
enum class Resolution { a, b, vertex };

int partner_port(Resolution r, int p) {
  if (r == Resolution::a) return p ^ 1;
  return (p % 2 == 1) ? (p + 1) % 4 : (p + 3) % 4;
}

const LaurentPoly& y_weight() {
  static const LaurentPoly y = -sigma() - LaurentPoly(1);
  return y;
}

LaurentPoly simplify_factor(const std::vector<MoveRecord>& log) {
  LaurentPoly f(1);
  for (const auto& m : log) {
    switch (m.kind) {
      case MoveKind::kink:
        f = f.shifted(m.a_paired ? 2 : -2);
        break;
      case MoveKind::vertex_twist:
        f = -f.shifted(m.a_paired ? 1 : -1);
        break;
      case MoveKind::split_circle:
        f *= sigma();
        break;
      case MoveKind::bigon:
      case MoveKind::vertex_slide:
        break;
    }
  }
  return f;
}

// ---- frontier transfer --------------------------------------------------

struct DpKey {
  std::vector<signed char> status;  // per frontier arc: -1 excluded, else class id
  friend bool operator<(const DpKey& a, const DpKey& b) { return a.status < b.status; }
};

std::vector<int> greedy_order(const Incidence& inc, const std::vector<std::size_t>& crossing_order) {
  std::vector<int> order;
  if (!crossing_order.empty()) {
    for (int v = 0; v < inc.vertex_count; ++v) order.push_back(v);
    for (std::size_t c : crossing_order) order.push_back(inc.vertex_count + static_cast<int>(c));
    return order;
  }
  std::vector<char> done(static_cast<std::size_t>(inc.node_count), 0);
  std::map<int, int> open;  // arc -> number of processed ends
  for (int step = 0; step < inc.node_count; ++step) {
    int best = -1;
    int best_closed = -1;
    int best_new = 0;
    for (int n = 0; n < inc.node_count; ++n) {
      if (done[static_cast<std::size_t>(n)]) continue;
      int closed = 0;
      int fresh = 0;
      for (int p = 0; p < inc.degree[static_cast<std::size_t>(n)]; ++p) {
        const int a = inc.arcs[static_cast<std::size_t>(n)][static_cast<std::size_t>(p)];
        if (open.count(a) && open[a] == 1) ++closed;
        else ++fresh;
      }
      if (closed > best_closed || (closed == best_closed && fresh < best_new)) {
        best = n;
        best_closed = closed;
        best_new = fresh;
      }
    }
    done[static_cast<std::size_t>(best)] = 1;
    order.push_back(best);
    for (int p = 0; p < inc.degree[static_cast<std::size_t>(best)]; ++p)
      ++open[inc.arcs[static_cast<std::size_t>(best)][static_cast<std::size_t>(p)]];
  }
  return order;
}

LaurentPoly frontier_sum(const Diagram& d, const std::vector<std::size_t>& crossing_order) {
  const Incidence inc = incidence(d);
  const std::vector<int> order = greedy_order(inc, crossing_order);

  std::vector<int> frontier;  // open arcs, aligned with DpKey::status
  std::map<DpKey, LaurentPoly> table;
  table.emplace(DpKey{}, LaurentPoly(1));
  std::map<std::tuple<int, int, int>, LaurentPoly> weight_cache;
  auto weight = [&](int a_exp, int cycles, int finished) -> const LaurentPoly& {
    const auto key = std::make_tuple(a_exp, cycles, finished);
    auto it = weight_cache.find(key);
    if (it != weight_cache.end()) return it->second;
    LaurentPoly w = y_weight().pow(static_cast<unsigned>(cycles)).shifted(a_exp);
    if (finished % 2 == 1) w = -w;
    return weight_cache.emplace(key, std::move(w)).first->second;
  };

  for (int node : order) {
    const int deg = inc.degree[static_cast<std::size_t>(node)];
    const auto& arcs = inc.arcs[static_cast<std::size_t>(node)];

    // Classify ports: closing an open arc, a loop at this node, or opening.
    std::vector<int> closing_pos(static_cast<std::size_t>(deg), -1);
    std::vector<int> loop_mate(static_cast<std::size_t>(deg), -1);
    std::vector<int> opening_ports;
    for (int p = 0; p < deg; ++p) {
      const int a = arcs[static_cast<std::size_t>(p)];
      const auto it = std::find(frontier.begin(), frontier.end(), a);
      if (it != frontier.end()) {
        closing_pos[static_cast<std::size_t>(p)] = static_cast<int>(it - frontier.begin());
        continue;
      }
      const End o = other_end(inc, a, End{node, p});
      if (o.node == node) {
        loop_mate[static_cast<std::size_t>(p)] = o.port;
        continue;
      }
      opening_ports.push_back(p);
    }
    std::vector<std::pair<int, int>> loops;
    for (int p = 0; p < deg; ++p)
      if (loop_mate[static_cast<std::size_t>(p)] > p) loops.emplace_back(p, loop_mate[static_cast<std::size_t>(p)]);

    std::vector<int> next_frontier;
    std::vector<int> keep_pos;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      bool closed = false;
      for (int p = 0; p < deg; ++p) closed = closed || closing_pos[static_cast<std::size_t>(p)] == static_cast<int>(i);
      if (!closed) {
        next_frontier.push_back(frontier[i]);
        keep_pos.push_back(static_cast<int>(i));
      }
    }
    for (int p : opening_ports) next_frontier.push_back(arcs[static_cast<std::size_t>(p)]);

    // Graph-vertex groups for each resolution of this node.
    struct Choice {
      std::array<int, 4> group;
      int groups;
      int a_exp;
    };
    std::vector<Choice> choices;
    if (deg == 3) {
      choices.push_back({{0, 0, 0, 0}, 1, 0});
    } else {
      choices.push_back({{0, 0, 1, 1}, 2, 1});    // A: (0,1)(2,3)
      choices.push_back({{0, 1, 1, 0}, 2, -1});   // B: (1,2)(3,0)
      choices.push_back({{0, 0, 0, 0}, 1, 0});    // 4-valent vertex
    }

    const int free_bits = static_cast<int>(opening_ports.size() + loops.size());
    std::map<DpKey, LaurentPoly> next;
    for (const auto& [key, value] : table) {
      int classes = 0;
      for (auto s : key.status) classes = std::max(classes, static_cast<int>(s) + 1);
      for (const auto& ch : choices) {
        for (int mask = 0; mask < (1 << free_bits); ++mask) {
          const int total = classes + ch.groups;
          std::vector<int> parent(static_cast<std::size_t>(total));
          std::iota(parent.begin(), parent.end(), 0);
          auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
            return x;
          };
          int cycles = 0;
          auto unite = [&](int x, int y) {
            x = find(x);
            y = find(y);
            if (x == y) ++cycles;
            else parent[static_cast<std::size_t>(x)] = y;
          };
          for (int p = 0; p < deg; ++p) {
            const int pos = closing_pos[static_cast<std::size_t>(p)];
            if (pos < 0) continue;
            const int s = key.status[static_cast<std::size_t>(pos)];
            if (s >= 0) unite(s, classes + ch.group[static_cast<std::size_t>(p)]);
          }
          int bit = 0;
          for (const auto& [p, q] : loops) {
            if (mask >> bit & 1)
              unite(classes + ch.group[static_cast<std::size_t>(p)], classes + ch.group[static_cast<std::size_t>(q)]);
            ++bit;
          }
          DpKey nk;
          nk.status.reserve(next_frontier.size());
          std::vector<int> roots;
          for (int pos : keep_pos) {
            const int s = key.status[static_cast<std::size_t>(pos)];
            roots.push_back(s >= 0 ? find(s) : -1);
          }
          for (int p : opening_ports) {
            roots.push_back((mask >> bit & 1) ? find(classes + ch.group[static_cast<std::size_t>(p)]) : -1);
            ++bit;
          }
          std::vector<int> relabel(static_cast<std::size_t>(total), -1);
          int next_id = 0;
          for (int r : roots) {
            if (r < 0) {
              nk.status.push_back(-1);
              continue;
            }
            if (relabel[static_cast<std::size_t>(r)] < 0) relabel[static_cast<std::size_t>(r)] = next_id++;
            nk.status.push_back(static_cast<signed char>(relabel[static_cast<std::size_t>(r)]));
          }
          int finished = 0;
          for (int x = 0; x < total; ++x)
            if (find(x) == x && relabel[static_cast<std::size_t>(x)] < 0) ++finished;
          auto& slot = next[nk];
          slot += value * weight(ch.a_exp, cycles, finished);
        }
      }
    }
    for (auto it = next.begin(); it != next.end();) {
      if (it->second.is_zero()) it = next.erase(it);
      else ++it;
    }
    table = std::move(next);
    frontier = std::move(next_frontier);
  }
  LaurentPoly result;
  for (const auto& [key, value] : table) result += value;
  return result * sigma().pow(static_cast<unsigned>(d.free_circles()));
}

}  // namespace

LaurentPoly h_poly(const Multigraph& g) {
  for (const auto& [u, v] : g.edges)
    if (u < 0 || v < 0 || u >= g.vertex_count || v >= g.vertex_count)
      throw Error(ErrorCode::invalid_argument, "multigraph edge references a missing vertex");
  return h_general(g.vertex_count, g.edges);
}

LaurentPoly yamada_raw(const Diagram& d, const YamadaOptions& opts) {
  if (!opts.crossing_order.empty()) {
    std::vector<std::size_t> sorted = opts.crossing_order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i || sorted.size() != d.crossing_count())
        throw Error(ErrorCode::invalid_argument, "crossing order must be a permutation of all crossings");
    return frontier_sum(d, opts.crossing_order);
  }
  if (!opts.simplify_first) return frontier_sum(d, {});
  const Simplified s = simplify(d);
  return simplify_factor(s.log) * frontier_sum(s.diagram, {});
}

LaurentPoly yamada_raw_state_sum(const Diagram& d) {
  const Incidence inc = incidence(d);
  const int nv = inc.vertex_count;
  const int nc = static_cast<int>(d.crossing_count());
  std::vector<Resolution> state(static_cast<std::size_t>(nc), Resolution::a);
  LaurentPoly total;
  long combos = 1;
  for (int i = 0; i < nc; ++i) combos *= 3;
  for (long code = 0; code < combos; ++code) {
    long rest = code;
    int a_exp = 0;
    for (int i = 0; i < nc; ++i) {
      state[static_cast<std::size_t>(i)] = static_cast<Resolution>(rest % 3);
      rest /= 3;
      if (state[static_cast<std::size_t>(i)] == Resolution::a) ++a_exp;
      if (state[static_cast<std::size_t>(i)] == Resolution::b) --a_exp;
    }
    // Graph vertices: trivalent vertices, then crossings resolved as vertices.
    std::vector<int> gv(static_cast<std::size_t>(inc.node_count), -1);
    int count = 0;
    for (int n = 0; n < inc.node_count; ++n)
      if (n < nv || state[static_cast<std::size_t>(n - nv)] == Resolution::vertex) gv[static_cast<std::size_t>(n)] = count++;
    Multigraph g;
    g.vertex_count = count;
    std::set<int> used;
    for (int n = 0; n < inc.node_count; ++n) {
      if (gv[static_cast<std::size_t>(n)] < 0) continue;
      for (int p = 0; p < inc.degree[static_cast<std::size_t>(n)]; ++p) {
        const int a0 = inc.arcs[static_cast<std::size_t>(n)][static_cast<std::size_t>(p)];
        if (used.count(a0)) continue;
        End here{n, p};
        int a = a0;
        while (true) {
          used.insert(a);
          const End o = other_end(inc, a, here);
          if (gv[static_cast<std::size_t>(o.node)] >= 0) {
            g.edges.emplace_back(gv[static_cast<std::size_t>(n)], gv[static_cast<std::size_t>(o.node)]);
            break;
          }
          here = End{o.node, partner_port(state[static_cast<std::size_t>(o.node - nv)], o.port)};
          a = inc.arcs[static_cast<std::size_t>(here.node)][static_cast<std::size_t>(here.port)];
        }
      }
    }
    int circles = d.free_circles();
    for (const auto& [a0, e] : inc.ends) {
      if (used.count(a0)) continue;
      ++circles;
      End here = e[0];
      int a = a0;
      while (!used.count(a)) {
        used.insert(a);
        const End o = other_end(inc, a, here);
        here = End{o.node, partner_port(state[static_cast<std::size_t>(o.node - nv)], o.port)};
        a = inc.arcs[static_cast<std::size_t>(here.node)][static_cast<std::size_t>(here.port)];
      }
    }
    total += (h_poly(g) * sigma().pow(static_cast<unsigned>(circles))).shifted(a_exp);
  }
  return total;
}

YamadaValue yamada_normalized(const Diagram& d, const YamadaOptions& opts) {
  if (!d.is_theta()) throw Error(ErrorCode::invalid_argument, "normalized Yamada polynomial needs a theta-curve diagram");
  YamadaValue v;
  const WritheSums w = writhe_sums(d);
  v.s = w.self;
  v.n = w.non_self;
  v.raw = yamada_raw(d, opts);
  v.normalized = divide_exact(neg_var_power(w.normalization_exponent()) * v.raw, sigma_minus_sigma_sq());
  return v;
}

}  // namespace thetapoly
