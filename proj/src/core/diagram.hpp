#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace thetapoly {

// Strand identity of an arc: 1, 2, 3 for the edges E1..E3 of a theta curve
// (or of the handcuff shapes produced by incoherent smoothings) and -k for
// the k-th circle component.
using StrandId = int;

// Trivalent vertex; arcs listed counterclockwise.
struct VertexRec {
  std::array<int, 3> arcs{};
  friend bool operator==(const VertexRec&, const VertexRec&) = default;
};

// Crossing X(a,b,c,d): arcs counterclockwise, a-c is the under strand and b-d
// the over strand. When the diagram is oriented, a is the incoming under arc
// and sign is +1/-1; in an unoriented diagram sign is 0.
struct CrossingRec {
  std::array<int, 4> arcs{};
  int sign = 0;
  friend bool operator==(const CrossingRec&, const CrossingRec&) = default;
};

enum class CrossingKind { self, non_self };

// Combinatorial diagram of a theta curve, possibly with extra circle
// components. Values are immutable once built: every operation below returns
// a new canonical diagram (arcs renumbered along the traversal E1, E2, E3,
// circles; source vertex first; crossings in order of first visit).
class Diagram {
public:
  Diagram() = default;

  const std::string& name() const noexcept { return name_; }
  const std::vector<VertexRec>& vertices() const noexcept { return vertices_; }
  const std::vector<CrossingRec>& crossings() const noexcept { return crossings_; }
  const std::map<int, StrandId>& strand_of_arc() const noexcept { return strand_of_arc_; }
  int free_circles() const noexcept { return free_circles_; }
  bool oriented() const noexcept { return oriented_; }
  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  int arc_count() const noexcept { return static_cast<int>(strand_of_arc_.size()); }

  StrandId strand_of(int arc) const;
  // Number of circle components, crossing-free ones included.
  int circle_count() const;
  // Two vertices joined by three edges, no circles, coherently oriented.
  bool is_theta() const;

  Diagram renamed(std::string name) const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.vertices_ == b.vertices_ && a.crossings_ == b.crossings_ && a.strand_of_arc_ == b.strand_of_arc_ &&
           a.free_circles_ == b.free_circles_ && a.oriented_ == b.oriented_;
  }

private:
  friend class PortGraph;
  std::string name_;
  std::vector<VertexRec> vertices_;
  std::vector<CrossingRec> crossings_;
  std::map<int, StrandId> strand_of_arc_;
  int free_circles_ = 0;
  bool oriented_ = true;
};

// Parses the line-oriented diagram format. Throws Error(parse) on malformed
// syntax and Error(validation) on structural problems.
Diagram parse_diagram(std::string_view text);
// Deterministic rendering in the same format.
std::string render_diagram(const Diagram& d);

// Throws Error(validation) if any structural invariant fails.
void validate(const Diagram& d);
// Euler characteristic check V - E + F = 2 on every connected component.
bool is_planar(const Diagram& d);

int crossing_sign(const Diagram& d, std::size_t crossing);
CrossingKind classify_crossing(const Diagram& d, std::size_t crossing);

struct WritheSums {
  int self = 0;      // s(D)
  int non_self = 0;  // n(D)
  int normalization_exponent() const { return non_self - 2 * self; }
  friend bool operator==(const WritheSums&, const WritheSums&) = default;
};
WritheSums writhe_sums(const Diagram& d);

enum class SignEntry { plus, minus, zero, infinity };
using NSign = std::vector<SignEntry>;

NSign parse_nsign(std::string_view text);  // e.g. "+-0i" or "1,-1,0,inf"
std::string nsign_to_string(const NSign& eps);
char sign_entry_char(SignEntry e);

// Replaces each crossing crossings[i] by the local picture eps[i]: +1/-1 set
// the crossing sign, 0 is the orientation-coherent smoothing and infinity the
// incoherent one. Throws Error(invalid_sign) for infinity when
// allow_incoherent is false, or for any entry on an unoriented diagram.
Diagram apply_nsign(const Diagram& d, const std::vector<std::size_t>& crossings, const NSign& eps,
                    bool allow_incoherent = true);

enum class MoveKind { kink, bigon, vertex_twist, vertex_slide, split_circle };
const char* move_kind_name(MoveKind k);

struct MoveRecord {
  MoveKind kind;
  // Sign of the removed crossing for kink / vertex_twist (0 if unoriented).
  int sign = 0;
  // Kink: the removed loop joins two ports that the A-smoothing pairs.
  // Vertex twist: the vertex is attached to an A-paired port pair.
  bool a_paired = false;
  // Strand carrying the removed kink, or the third edge of a vertex slide.
  StrandId strand = 0;
  std::string describe() const;
};

struct Simplified {
  Diagram diagram;
  std::vector<MoveRecord> log;
};

// Greedily removes kinks, reducible bigons, vertex twists and strands that can
// slide past a vertex with fewer crossings, then extracts crossing-free
// circles (each logged as split_circle and removed from the result).
Simplified simplify(const Diagram& d);

struct SpliceResult {
  Diagram diagram;
  std::vector<std::size_t> left_crossings;   // old index -> new index
  std::vector<std::size_t> right_crossings;
};

// Splices `right` into the sink vertex of `left`, gluing its source vertex.
SpliceResult connected_sum_mapped(const Diagram& left, const Diagram& right);
Diagram connected_sum(const Diagram& left, const Diagram& right);

Diagram mirror(const Diagram& d);

// Crossing visit order used by the skein evaluators: edges in the given
// order starting at the source vertex, then circle components.
struct CrossingVisit {
  int first_visit = 0;        // position in the traversal of the first pass
  bool first_on_under = false;
};
std::vector<CrossingVisit> traversal_visits(const Diagram& d, std::array<int, 3> edge_order = {1, 2, 3});

// Named diagrams: trivial, theta_3_1, theta_5_1, T(k) for odd k >= 1.
Diagram catalog(std::string_view name);
Diagram twist_family(int k);
std::vector<std::string> catalog_names();

}  // namespace thetapoly
