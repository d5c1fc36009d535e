#include "properties.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "finitetype.hpp"
#include "laurent.hpp"
#include "random_diagram.hpp"
#include "yamada.hpp"
#include "yokota.hpp"

namespace thetapoly::testing {

namespace {

PropertyResult run(const std::string& name, std::uint64_t seed, int cases,
                   const std::function<std::string(std::mt19937_64&)>& one) {
  PropertyResult r{name, 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i) {
    std::string why;
    try {
      why = one(rng);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    ++r.cases;
    if (!why.empty()) {
      ++r.failures;
      if (r.first_failure.empty()) r.first_failure = "case " + std::to_string(i) + ": " + why;
    }
  }
  return r;
}

mpz_class random_big(std::mt19937_64& rng) {
  // Up to ~80 bits so products leave machine range.
  mpz_class v(static_cast<unsigned long>(rng() >> 24));
  v <<= static_cast<unsigned>(rng() % 48);
  v += static_cast<unsigned long>(rng() % 1000);
  return rng() % 2 ? v : mpz_class(-v);
}

LaurentPoly random_poly(std::mt19937_64& rng) {
  LaurentPoly p;
  const int terms = static_cast<int>(rng() % 6);
  for (int i = 0; i < terms; ++i) p += LaurentPoly::monomial(random_big(rng), static_cast<int>(rng() % 13) - 6);
  return p;
}

LaurentPoly small_poly(std::mt19937_64& rng) {
  LaurentPoly p;
  const int terms = static_cast<int>(rng() % 5);
  for (int i = 0; i < terms; ++i)
    p += LaurentPoly::monomial(static_cast<long>(rng() % 7) - 3, static_cast<int>(rng() % 9) - 4);
  return p;
}

}  // namespace

PropertyResult laurent_ring_axioms(std::uint64_t seed, int cases) {
  return run("laurent ring axioms", seed, cases, [](std::mt19937_64& rng) -> std::string {
    const LaurentPoly p = random_poly(rng), q = random_poly(rng), s = random_poly(rng);
    if (p + q != q + p) return "addition not commutative";
    if ((p + q) + s != p + (q + s)) return "addition not associative";
    if (p * q != q * p) return "multiplication not commutative";
    if ((p * q) * s != p * (q * s)) return "multiplication not associative";
    if (p * (q + s) != p * q + p * s) return "not distributive";
    if (p + LaurentPoly() != p || p * LaurentPoly(1) != p) return "identity failed";
    if (!(p - p).is_zero() || p + (-p) != LaurentPoly()) return "additive inverse failed";
    for (const auto& [deg, c] : (p * q).terms())
      if (c == 0) return "stored zero coefficient at degree " + std::to_string(deg);
    if (parse_laurent(p.to_string()) != p) return "text round trip failed for " + p.to_string();
    if (!q.is_zero() && try_divide_exact(p * q, q) != p) return "exact division failed";
    return {};
  });
}

PropertyResult exp_substitute_morphism(std::uint64_t seed, int cases) {
  return run("exp_substitute morphism", seed, cases, [](std::mt19937_64& rng) -> std::string {
    const LaurentPoly p = small_poly(rng), q = small_poly(rng);
    const auto n = static_cast<unsigned>(rng() % 10);
    const TruncSeries sp = exp_substitute(p, n), sq = exp_substitute(q, n);
    if (exp_substitute(p + q, n) != sp + sq) return "not additive";
    if (exp_substitute(p * q, n) != sp * sq) return "not multiplicative";
    if (exp_substitute(LaurentPoly(1), n) != TruncSeries(n, {mpq_class(1)})) return "1 does not map to 1";
    if (sp.coefficient(0) != mpq_class(p.evaluate_at_one())) return "constant term is not p(1)";
    return {};
  });
}

PropertyResult planarity_preservation(std::uint64_t seed, int cases) {
  return run("planarity preservation", seed, cases, [](std::mt19937_64& rng) -> std::string {
    const Diagram d = random_theta_nonempty(rng, 3);
    if (!is_planar(d)) return "generator produced a non-planar diagram";
    const std::size_t c = rng() % d.crossing_count();
    const SignEntry options[] = {SignEntry::plus, SignEntry::minus, SignEntry::zero, SignEntry::infinity};
    const Diagram e = apply_nsign(d, {c}, {options[rng() % 4]});
    if (!is_planar(e)) return "apply_nsign broke planarity";
    const Diagram s = simplify(d).diagram;
    if (!is_planar(s)) return "simplify broke planarity";
    if (s.crossing_count() > d.crossing_count()) return "simplify added crossings";
    if (!is_planar(mirror(d))) return "mirror broke planarity";
    const Diagram other = random_theta(rng, 2);
    if (!is_planar(connected_sum(d, other))) return "connected_sum broke planarity";
    if (parse_diagram(render_diagram(d)) != d) return "render/parse round trip failed";
    return {};
  });
}

PropertyResult evaluator_order_independence(std::uint64_t seed, int cases) {
  return run("evaluator order independence", seed, cases, [](std::mt19937_64& rng) -> std::string {
    const Diagram d = random_theta_nonempty(rng, 3);
    YamadaOptions plain;
    plain.simplify_first = false;
    const LaurentPoly base = yamada_raw(d, plain);
    YamadaOptions shuffled;
    shuffled.crossing_order.resize(d.crossing_count());
    std::iota(shuffled.crossing_order.begin(), shuffled.crossing_order.end(), 0);
    std::shuffle(shuffled.crossing_order.begin(), shuffled.crossing_order.end(), rng);
    if (yamada_raw(d, shuffled) != base) return "yamada depends on crossing order";
    if (yamada_raw(d) != base) return "yamada simplify-first differs";
    if (d.crossing_count() <= 6 && yamada_raw_state_sum(d) != base) return "yamada differs from 3^c state sum";

    const LaurentPoly bracket = yokota_bracket(d);
    YokotaOptions random_pick;
    random_pick.seed = rng();
    random_pick.simplify_first = rng() % 2 == 0;
    if (yokota_bracket(d, random_pick) != bracket) return "yokota depends on the bad-crossing choice";
    // A different edge order changes the descending base diagrams but not
    // the invariant.
    YokotaOptions reordered;
    std::array<int, 3> order{1, 2, 3};
    std::shuffle(order.begin(), order.end(), rng);
    reordered.edge_order = order;
    if (yokota_bracket(d, reordered) != bracket) return "yokota depends on the edge order";
    return {};
  });
}

PropertyResult alt_sum_linearity(std::uint64_t seed, int cases) {
  return run("alt_sum linearity", seed, cases, [](std::mt19937_64& rng) -> std::string {
    const Diagram d = random_theta_nonempty(rng, 2);
    std::vector<std::size_t> all(d.crossing_count());
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min<std::size_t>(all.size(), rng() % 3));
    const Invariant inv = rng() % 2 ? Invariant::yamada : Invariant::yokota;
    const CoeffFunctional v{inv, false, static_cast<int>(rng() % 9) - 4, 0};
    const CoeffFunctional w{inv, true, static_cast<int>(rng() % 4), 6};
    const mpq_class a(static_cast<long>(rng() % 11) - 5, static_cast<unsigned long>(1 + rng() % 4));
    const mpq_class b(static_cast<long>(rng() % 11) - 5, static_cast<unsigned long>(1 + rng() % 4));
    const mpq_class combined = alt_sum(d, all, inv, [&](const LaurentPoly& p) -> mpq_class { return a * v.apply(p) + b * w.apply(p); });
    const mpq_class separate = a * alt_sum(d, all, v).value + b * alt_sum(d, all, w).value;
    if (combined != separate) return "alt_sum is not linear in the functional";
    if (all.empty() && alt_sum(d, all, v).value != v.apply(invariant_value(d, inv))) return "empty C is not plain value";
    return {};
  });
}

}  // namespace thetapoly::testing
