#pragma once

// Mutable working form of a Diagram. Every node owns four slots (vertices use
// three); an arc is a pair of mated slots. Local moves are expressed as slot
// relinking and the result is turned back into a canonical Diagram.

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "diagram.hpp"

namespace thetapoly {

class PortGraph {
public:
  PortGraph() = default;
  explicit PortGraph(const Diagram& d);
  // Unoriented graph straight from incidence records; checks that every arc
  // occurs exactly twice. Vertex 0 becomes the source.
  static PortGraph from_records(const std::vector<VertexRec>& verts, const std::vector<CrossingRec>& xs,
                                const std::map<int, StrandId>& strand_of);

  static int slot(int node, int port) { return node * 4 + port; }
  static int node_of(int s) { return s / 4; }
  static int port_of(int s) { return s % 4; }

  int node_count() const { return static_cast<int>(degree_.size()); }
  int degree(int node) const { return degree_[static_cast<std::size_t>(node)]; }
  bool alive(int node) const { return degree(node) != 0; }
  bool is_vertex(int node) const { return degree(node) == 3; }
  bool is_crossing(int node) const { return degree(node) == 4; }
  int crossing_count() const;

  int add_node(int degree);
  void kill(int node);

  int mate(int s) const { return mate_[static_cast<std::size_t>(s)]; }
  void link(int a, int b);
  bool out(int s) const { return out_[static_cast<std::size_t>(s)] == 1; }
  void set_out(int s, bool v) { out_[static_cast<std::size_t>(s)] = v ? 1 : 0; }
  StrandId label(int s) const { return label_[static_cast<std::size_t>(s)]; }
  void set_label(int s, StrandId l) { label_[static_cast<std::size_t>(s)] = l; }

  // Slot following s counterclockwise around its node.
  int ccw_next(int s) const { return slot(node_of(s), (port_of(s) + 1) % degree(node_of(s))); }

  // Removes a crossing, joining the outside partners of each port pair.
  void splice(int node, const std::array<std::pair<int, int>, 2>& pairs);
  // Renumbers ports: new port k is old port k + shift.
  void rotate(int node, int shift);

  // Port pairs for the two smoothings of an oriented crossing.
  std::array<std::pair<int, int>, 2> coherent_pairs(int node) const;
  std::array<std::pair<int, int>, 2> incoherent_pairs(int node) const;
  int sign(int node) const;

  // Faces of the rotation system as cyclic slot sequences; each slot is the
  // start of one dart.
  std::vector<std::vector<int>> faces() const;
  bool planar() const;

  // Sets out-flags by walking every edge away from the source vertex. Throws
  // Error(validation) if an edge fails to reach the other vertex.
  void orient_from_source();
  void check_coherent() const;

  Diagram to_diagram(std::string name, std::vector<int>* node_to_crossing = nullptr) const;

  int free_circles = 0;
  bool oriented = true;
  int source = -1;

private:
  std::vector<int> degree_;
  std::vector<int> mate_;
  std::vector<signed char> out_;
  std::vector<StrandId> label_;
};

}  // namespace thetapoly
