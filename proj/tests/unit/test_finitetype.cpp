#include <doctest.h>

#include "diagram.hpp"
#include "error.hpp"
#include "finitetype.hpp"
#include "yamada.hpp"
#include "yokota.hpp"

using namespace thetapoly;

namespace {

const CoeffFunctional kV0{Invariant::yamada, false, 0, 0};

LaurentPoly rtilde(const Diagram& d) { return yamada_normalized(d).normalized; }

}  // namespace

TEST_CASE("coefficient functionals") {
  const CoeffFunctional a = parse_coeff("A^-3", Invariant::yamada, 16);
  CHECK_FALSE(a.series);
  CHECK(a.index == -3);
  CHECK(a.apply(parse_laurent("2*A^-3+A")) == 2);
  const CoeffFunctional x = parse_coeff("x^2", Invariant::yamada, 4);
  CHECK(x.series);
  // A^2 = e^{2x}: coefficient of x^2 is 2.
  CHECK(x.apply(LaurentPoly::monomial(1, 2)) == 2);
  CHECK(parse_coeff("z^2", Invariant::yokota, 16).index == 2);
  CHECK_THROWS_AS(parse_coeff("x^5", Invariant::yamada, 4), Error);
  CHECK_THROWS_AS(parse_coeff("q^1", Invariant::yamada, 4), Error);
}

TEST_CASE("alt_sum with an empty crossing set is the plain value") {
  for (const auto& name : catalog_names()) {
    const Diagram d = catalog(name);
    CAPTURE(name);
    for (int r = -3; r <= 3; ++r) {
      const CoeffFunctional v{Invariant::yamada, false, r, 0};
      CHECK(alt_sum(d, {}, v).value == mpq_class(rtilde(d).coefficient(r)));
    }
    const FtReport rep = alt_sum(d, {}, CoeffFunctional{Invariant::yokota, true, 1, 4});
    CHECK(rep.rows.size() == 1);
    CHECK(poly_alt_sum(d, {}) == rtilde(d));
  }
}

TEST_CASE("T-family sums") {
  const FtReport five = alt_sum(twist_family(5), {0, 1}, kV0);
  CHECK(five.value == 1);
  REQUIRE(five.rows.size() == 4);
  CHECK(five.rows[0].plus_count == 2);
  CHECK(five.rows[3].plus_count == 0);
  CHECK(five.divisibility.has_value());
  CHECK(*five.divisibility >= 2);
  CHECK(alt_sum(twist_family(5), {3, 1}, kV0).value == 1);
  CHECK(alt_sum(twist_family(9), {0, 1, 2, 3}, kV0).value == 1);
  CHECK(alt_sum(twist_family(9), {8, 5, 2, 0}, kV0).value == 1);

  const LaurentPoly by_hand = rtilde(twist_family(5)) - mpz_class(2) * rtilde(twist_family(3)) + rtilde(twist_family(1));
  CHECK(poly_alt_sum(twist_family(5), {0, 1}) == by_hand);
  CHECK(poly_alt_sum(twist_family(5), {1, 0}) == by_hand);
}

TEST_CASE("alt_sum rejects repeated or missing crossings") {
  CHECK_THROWS_AS(alt_sum(twist_family(3), {0, 0}, kV0), Error);
  CHECK_THROWS_AS(alt_sum(twist_family(3), {3}, kV0), Error);
}

TEST_CASE("E-chain identity") {
  const Diagram t3 = twist_family(3);
  const EchainRecord zero = echain_witness(t3, {});
  CHECK(zero.equal);
  CHECK(zero.lhs == sigma_minus_sigma_sq() * rtilde(t3));
  CHECK(echain_witness(t3, {1}).equal);
  const Diagram th = catalog("theta_3_1");
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a + 1; b < 3; ++b) CHECK(echain_witness(th, {a, b}).equal);
  CHECK(echain_witness(catalog("theta_5_1"), {0, 4}).equal);
}

TEST_CASE("order certificates") {
  std::vector<Diagram> ds;
  for (const auto& name : catalog_names()) ds.push_back(catalog(name));
  for (unsigned n = 0; n <= 2; ++n) {
    const CertificateReport rep = order_certificate(ds, n, 8);
    CAPTURE(n);
    CHECK(rep.violations() == 0);
    CHECK_FALSE(rep.entries.empty());
  }
  const CertificateReport yo = order_certificate({twist_family(5)}, 1, 8, Invariant::yokota);
  CHECK(yo.entries.size() == 10);
  CHECK(yo.violations() == 0);
  CHECK_THROWS_AS(order_certificate(ds, 9, 8), Error);
}

TEST_CASE("theorem experiments") {
  const TheoremReport t0 = theorem1_experiment(0, 1);
  CHECK(t0.primary.value == 1);
  CHECK(t0.selection_independent);
  const TheoremReport t1 = theorem1_experiment(1, 1);
  CHECK(t1.nonzero());
  CHECK(t1.selection_independent);

  const Diagram g = connected_sum(mirror(twist_family(5)), catalog("theta_5_1"));
  CHECK(rtilde(connected_sum(g, mirror(twist_family(3)))).min_degree() == 1 + 2);

  const TheoremReport y0 = theorem2_experiment(0, 1);
  CHECK(y0.primary.value != 0);
  CHECK(theorem2_experiment(1, 1).nonzero());
  const LaurentPoly p = yokota_normalized(catalog("theta_3_1")).pz;
  CHECK(p.max_degree() == 10);
  CHECK(p.min_degree() == 2);

  try {
    theorem1_experiment(2, 1);
    FAIL("expected a budget error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::budget_exceeded);
  }
}
