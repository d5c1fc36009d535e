#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>

#include "error.hpp"
#include "diagram.hpp"
#include "random_diagram.hpp"
#include "yamada.hpp"

using namespace thetapoly;

namespace {

const char* kKink = R"(theta kink
V 1 4 5
V 3 5 4
X 1 3 2 2
edge 1 E1
edge 2 E1
edge 3 E1
edge 4 E2
edge 5 E3
)";

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::invalid_argument;
}

std::vector<int> sorted_signs(const Diagram& d) {
  std::vector<int> s;
  for (const auto& x : d.crossings()) s.push_back(x.sign);
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("parse the trivial theta in record notation") {
  const Diagram d = parse_diagram("V(1,2,3)\nV(3,2,1)\nedge 1 E1\nedge 2 E2\nedge 3 E3\n");
  CHECK(d.crossing_count() == 0);
  CHECK(d.is_theta());
  CHECK(is_planar(d));
  CHECK(d == catalog("trivial"));
}

TEST_CASE("parse errors and validation errors") {
  CHECK(code_of([] { parse_diagram("V 1 2 7\nV 1 2 7\nX 7 3 4 3\nedge 1 E1\n"); }) == ErrorCode::validation);
  CHECK(code_of([] { parse_diagram("V 1 2 3\nV 1 3 2\nY 1\n"); }) == ErrorCode::parse);
  CHECK(code_of([] { parse_diagram("V 1 2 3\nV 1 3 2\nedge 1 E4\nedge 2 E2\nedge 3 E3\n"); }) == ErrorCode::parse);
  CHECK(code_of([] { parse_diagram("V 1 2 3\nedge 1 E1\nedge 2 E2\nedge 3 E3\n"); }) == ErrorCode::validation);
  // Arc 3 never leaves the source: not a theta shape.
  CHECK(code_of([] { parse_diagram("V 1 2 2\nV 1 3 3\nedge 1 E1\nedge 2 E2\nedge 3 E3\n"); }) ==
        ErrorCode::validation);
}

TEST_CASE("catalog diagrams round-trip through the text format") {
  for (const auto& name : catalog_names()) {
    const Diagram d = catalog(name);
    CAPTURE(name);
    validate(d);
    CHECK(is_planar(d));
    CHECK(d.is_theta());
    CHECK(parse_diagram(render_diagram(d)) == d);
    CHECK(mirror(mirror(d)) == d);
  }
  CHECK(catalog("theta_3_1").crossing_count() == 3);
}

TEST_CASE("catalog errors") {
  CHECK(code_of([] { catalog("nope"); }) == ErrorCode::unknown_name);
  CHECK(code_of([] { catalog("T(4)"); }) == ErrorCode::bad_parameter);
  CHECK(code_of([] { catalog("T(-1)"); }) == ErrorCode::bad_parameter);
  CHECK(code_of([] { catalog("T(x)"); }) == ErrorCode::bad_parameter);
  CHECK(code_of([] { twist_family(0); }) == ErrorCode::bad_parameter);
}

TEST_CASE("kink: sign, class and writhe") {
  const Diagram k = parse_diagram(kKink);
  REQUIRE(k.crossing_count() == 1);
  CHECK(crossing_sign(k, 0) == 1);
  CHECK(classify_crossing(k, 0) == CrossingKind::self);
  CHECK(writhe_sums(k) == WritheSums{1, 0});
  CHECK(crossing_sign(mirror(k), 0) == -1);
  CHECK(writhe_sums(catalog("trivial")) == WritheSums{0, 0});
}

TEST_CASE("T-family crossings") {
  // The pinned T-family is a (2,k) torus knot tied into E1, so its crossings
  // are self-crossings of equal sign.
  for (int k : {1, 3, 5, 7, 9}) {
    const Diagram t = twist_family(k);
    CAPTURE(k);
    CHECK(t.crossing_count() == static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < t.crossing_count(); ++i) {
      CHECK(crossing_sign(t, i) == 1);
      CHECK(classify_crossing(t, i) == CrossingKind::self);
    }
    CHECK(writhe_sums(t) == WritheSums{k, 0});
  }
}

TEST_CASE("crossing between a circle and a theta edge is a non-self crossing") {
  int found = 0;
  for (const auto& name : catalog_names()) {
    const Diagram d = catalog(name);
    for (std::size_t c = 0; c < d.crossing_count(); ++c) {
      const Diagram s = apply_nsign(d, {c}, {SignEntry::zero});
      for (std::size_t x = 0; x < s.crossing_count(); ++x) {
        const auto& rec = s.crossings()[x];
        const StrandId a = s.strand_of(rec.arcs[0]);
        const StrandId b = s.strand_of(rec.arcs[1]);
        if ((a < 0) != (b < 0)) {
          ++found;
          CHECK(classify_crossing(s, x) == CrossingKind::non_self);
        }
      }
    }
  }
  CHECK(found > 0);
}

TEST_CASE("n-signs") {
  CHECK(parse_nsign("+-0i") == NSign{SignEntry::plus, SignEntry::minus, SignEntry::zero, SignEntry::infinity});
  CHECK(parse_nsign("1,-1,0,inf") == parse_nsign("+-0i"));
  CHECK(nsign_to_string(parse_nsign("1,-1,0,inf")) == "+-0i");

  const Diagram t3 = twist_family(3);
  CHECK(apply_nsign(t3, {1}, {SignEntry::plus}) == t3);
  CHECK(simplify(apply_nsign(t3, {0}, {SignEntry::minus})).diagram.crossing_count() == 0);

  const Diagram k = parse_diagram(kKink);
  const Diagram smoothed = apply_nsign(k, {0}, {SignEntry::zero});
  CHECK(smoothed.crossing_count() == 0);
  CHECK(smoothed.circle_count() == 1);

  CHECK(code_of([&] { apply_nsign(k, {0}, {SignEntry::infinity}, false); }) == ErrorCode::invalid_sign);
  const Diagram unoriented = apply_nsign(t3, {0}, {SignEntry::infinity});
  CHECK_FALSE(unoriented.oriented());
  CHECK(code_of([&] { apply_nsign(unoriented, {0}, {SignEntry::plus}); }) == ErrorCode::invalid_sign);
  CHECK(code_of([&] { apply_nsign(t3, {0, 0}, {SignEntry::plus, SignEntry::plus}); }) ==
        ErrorCode::invalid_argument);
}

TEST_CASE("switching twist crossings descends the T-family") {
  for (int k : {3, 5, 7, 9}) {
    for (int p = 1; 2 * p < k + 1; ++p) {
      std::vector<std::size_t> c;
      for (int i = 0; i < p; ++i) c.push_back(static_cast<std::size_t>(2 * i));
      const Diagram s = simplify(apply_nsign(twist_family(k), c, NSign(c.size(), SignEntry::minus))).diagram;
      CAPTURE(k);
      CAPTURE(p);
      // T(1) is a single kink and simplifies away.
      const Diagram expect = k - 2 * p == 1 ? catalog("trivial") : twist_family(k - 2 * p);
      CHECK(s == expect);
    }
  }
}

TEST_CASE("simplify") {
  const Simplified k = simplify(parse_diagram(kKink));
  CHECK(k.diagram == catalog("trivial"));
  REQUIRE(k.log.size() == 1);
  CHECK(k.log[0].kind == MoveKind::kink);
  CHECK(k.log[0].sign == 1);
  CHECK(k.log[0].strand == 1);

  const Simplified t = simplify(catalog("theta_3_1"));
  CHECK(t.diagram == catalog("theta_3_1"));
  CHECK(t.log.empty());
}

TEST_CASE("connected sum") {
  for (const auto& name : catalog_names()) {
    const Diagram d = catalog(name);
    CAPTURE(name);
    const Diagram s = connected_sum(d, catalog("trivial"));
    CHECK(is_planar(s));
    CHECK(s.crossing_count() == d.crossing_count());
    CHECK(simplify(s).diagram.crossing_count() == simplify(d).diagram.crossing_count());
  }
  const LaurentPoly r3 = yamada_normalized(twist_family(3)).normalized;
  CHECK(yamada_normalized(connected_sum(twist_family(3), twist_family(3))).normalized == r3 * r3);
  const Diagram g = connected_sum(mirror(twist_family(5)), catalog("theta_5_1"));
  CHECK(yamada_normalized(g).normalized.min_degree() == 1);
}

TEST_CASE("mirror") {
  CHECK(mirror(catalog("trivial")) == catalog("trivial"));
  const Diagram d = catalog("theta_5_1");
  CHECK(yamada_normalized(mirror(d)).normalized == substitute_inverse(yamada_normalized(d).normalized));
}

TEST_CASE("property: crossing signs do not depend on the source choice" * doctest::description("seeded, 100 cases")) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const Diagram d = testing::random_theta_nonempty(rng, 3);
    std::string text = render_diagram(d);
    const auto at = text.find("source 1");
    REQUIRE(at != std::string::npos);
    text.replace(at, 8, "source 2");
    const Diagram flipped = parse_diagram(text);
    CHECK(writhe_sums(flipped) == writhe_sums(d));
    CHECK(sorted_signs(flipped) == sorted_signs(d));
  }
}

TEST_CASE("property: simplify never adds crossings and keeps planarity" * doctest::description("seeded, 100 cases")) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    const Diagram d = testing::random_theta(rng, 4);
    const Simplified s = simplify(d);
    CHECK(s.diagram.crossing_count() <= d.crossing_count());
    CHECK(is_planar(s.diagram));
    CHECK(simplify(s.diagram).log.empty());
  }
}
