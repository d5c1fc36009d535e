#include <doctest.h>

#include <random>

#include "diagram.hpp"
#include "error.hpp"
#include "random_diagram.hpp"
#include "yokota.hpp"

using namespace thetapoly;

namespace {

const LaurentPoly t = LaurentPoly::monomial(1, 1);
const LaurentPoly t_inv = LaurentPoly::monomial(1, -1);
const LaurentPoly t_gap = LaurentPoly::monomial(1, 3) - LaurentPoly::monomial(1, -3);

const char* kKinkPos = "V 1 4 5\nV 3 5 4\nX 1 3 2 2\nedge 1 E1\nedge 2 E1\nedge 3 E1\nedge 4 E2\nedge 5 E3\n";
const char* kKinkNeg = "V 1 4 5\nV 3 5 4\nX 1 2 2 3\nedge 1 E1\nedge 2 E1\nedge 3 E1\nedge 4 E2\nedge 5 E3\n";
const char* kTwistPos = "V 1 3 5\nV 2 4 5\nX 1 4 2 3\nedge 1 E1\nedge 2 E1\nedge 3 E2\nedge 4 E2\nedge 5 E3\n";

bool yo2_holds(const Diagram& d, std::size_t x) {
  const auto b = [&](SignEntry e) { return yokota_bracket(apply_nsign(d, {x}, {e})); };
  return t * b(SignEntry::plus) - t_inv * b(SignEntry::minus) == t_gap * b(SignEntry::zero);
}

}  // namespace

TEST_CASE("bracket of the trivial theta") {
  CHECK(yokota_bracket(catalog("trivial")) == LaurentPoly(1));
  CHECK(yokota_normalized(catalog("trivial")).pz == LaurentPoly(1));
}

TEST_CASE("bracket: kinks") {
  CHECK(yokota_bracket(parse_diagram(kKinkPos)) == t.pow(8));
  CHECK(yokota_bracket(parse_diagram(kKinkNeg)) == t_inv.pow(8));
  CHECK(yokota_bracket(parse_diagram(kKinkPos), {{1, 2, 3}, {}, false}) == t.pow(8));
  CHECK(yokota_normalized(parse_diagram(kKinkNeg)).pz == LaurentPoly(1));
}

TEST_CASE("bracket: vertex twists") {
  const Diagram pos = parse_diagram(kTwistPos);
  CHECK(yokota_bracket(pos, {{1, 2, 3}, {}, false}) == -t_inv.pow(4));
  CHECK(yokota_bracket(mirror(pos)) == -t.pow(4));
  CHECK(yokota_normalized(pos).pz == LaurentPoly(1));
}

TEST_CASE("bracket: a split circle") {
  const Diagram with_circle = apply_nsign(parse_diagram(kKinkPos), {0}, {SignEntry::zero});
  REQUIRE(with_circle.circle_count() == 1);
  const LaurentPoly loop = LaurentPoly::monomial(1, 6) + LaurentPoly(1) + LaurentPoly::monomial(1, -6);
  CHECK(yokota_bracket(with_circle) == loop);
  CHECK(yokota_bracket(with_circle, {{1, 2, 3}, {}, false}) == loop);
}

TEST_CASE("bracket skein relation at every crossing of every catalog diagram") {
  for (const auto& name : catalog_names()) {
    const Diagram d = catalog(name);
    for (std::size_t x = 0; x < d.crossing_count(); ++x) {
      CAPTURE(name);
      CAPTURE(x);
      CHECK(yo2_holds(d, x));
    }
  }
}

TEST_CASE("pinned values") {
  CHECK(yokota_normalized(catalog("theta_3_1")).pz == parse_laurent("z^2+z^8-z^10", "z"));
  CHECK(yokota_normalized(twist_family(1)).pz == LaurentPoly(1));
  for (int n = 1; n <= 2; ++n) {
    const LaurentPoly p = yokota_normalized(twist_family(2 * n + 1)).pz;
    CHECK(p.max_degree() == -4 * n);
    CHECK(p.min_degree() == -(8 * n + 4));
  }
}

TEST_CASE("P_z only has even exponents on the catalog") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const LaurentPoly p = yokota_normalized(catalog(name)).pz;
    for (const auto& term : p.terms()) CHECK(term.first % 2 == 0);
  }
}

TEST_CASE("errors") {
  const Diagram unoriented = apply_nsign(twist_family(3), {0}, {SignEntry::infinity});
  CHECK_THROWS_AS(yokota_bracket(unoriented), Error);
  CHECK_THROWS_AS(yokota_normalized(apply_nsign(twist_family(3), {0}, {SignEntry::zero})), Error);
}

TEST_CASE("property: bracket skein relation and mirror symmetry on random diagrams" * doctest::description("seeded, 100 cases")) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const Diagram d = testing::random_theta_nonempty(rng, 3);
    CHECK(yo2_holds(d, rng() % d.crossing_count()));
    CHECK(yokota_normalized(mirror(d)).pz == substitute_inverse(yokota_normalized(d).pz));
  }
}

TEST_CASE("property: P_z is unchanged by simplification and edge order" * doctest::description("seeded, 100 cases")) {
  std::mt19937_64 rng(32);
  const std::array<std::array<int, 3>, 3> orders{{{2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};
  for (int i = 0; i < 100; ++i) {
    const Diagram d = testing::random_theta(rng, 3);
    const LaurentPoly p = yokota_normalized(d, {{1, 2, 3}, {}, false}).pz;
    CHECK(yokota_normalized(simplify(d).diagram).pz == p);
    CHECK(yokota_normalized(d, {orders[static_cast<std::size_t>(i) % 3], rng(), false}).pz == p);
  }
}
