#include "yokota.hpp"

#include <map>
#include <random>
#include <string>

#include "error.hpp"

namespace thetapoly {

namespace {

LaurentPoly t_pow(int k) { return LaurentPoly::monomial(1, k); }

// (-t^4)^k
LaurentPoly neg_t4_pow(int k) { return (k % 2 == 0 ? t_pow(4 * k) : -t_pow(4 * k)); }

const LaurentPoly& circle_factor() {
  static const LaurentPoly f = t_pow(6) + LaurentPoly(1) + t_pow(-6);
  return f;
}

const LaurentPoly& skein_gap() {
  static const LaurentPoly g = t_pow(3) - t_pow(-3);
  return g;
}

LaurentPoly move_factor(const std::vector<MoveRecord>& log) {
  LaurentPoly f(1);
  for (const auto& m : log) {
    switch (m.kind) {
      case MoveKind::kink:
        f = f.shifted(8 * m.sign);
        break;
      case MoveKind::vertex_twist:
        f = -f.shifted(-4 * m.sign);
        break;
      case MoveKind::split_circle:
        f *= circle_factor();
        break;
      case MoveKind::bigon:
      case MoveKind::vertex_slide:
        break;
    }
  }
  return f;
}

// Descending diagram: the theta part is a trivial theta curve up to its
// writhe correction and every circle is a split unknot lying underneath.
LaurentPoly descending_value(const Diagram& d) {
  int theta_self = 0;
  int theta_non_self = 0;
  std::map<StrandId, int> circle_writhe;
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const auto& x = d.crossings()[i];
    const StrandId a = d.strand_of(x.arcs[0]);
    const StrandId b = d.strand_of(x.arcs[1]);
    if (a > 0 && b > 0) {
      if (a == b) theta_self += x.sign;
      else theta_non_self += x.sign;
    } else if (a == b) {
      circle_writhe[a] += x.sign;
    }
  }
  for (const auto& [arc, st] : d.strand_of_arc())
    if (st < 0) circle_writhe.emplace(st, 0);
  LaurentPoly v = neg_t4_pow(2 * theta_self - theta_non_self);
  for (const auto& [c, w] : circle_writhe) v *= circle_factor().shifted(8 * w);
  for (int i = 0; i < d.free_circles(); ++i) v *= circle_factor();
  return v;
}

class Evaluator {
public:
  explicit Evaluator(const YokotaOptions& opts) : opts_(opts) {
    if (opts.seed) rng_.seed(*opts.seed);
  }

  LaurentPoly eval(const Diagram& d) {
    if (!opts_.simplify_first) return eval_reduced(d);
    const Simplified s = simplify(d);
    return move_factor(s.log) * eval_reduced(s.diagram);
  }

private:
  LaurentPoly eval_reduced(const Diagram& d) {
    if (d.crossing_count() == 0) return descending_value(d);
    const std::string key = render_diagram(d);
    const auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;

    const auto visits = traversal_visits(d, opts_.edge_order);
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < visits.size(); ++i)
      if (visits[i].first_on_under) bad.push_back(i);

    LaurentPoly result;
    if (bad.empty()) {
      result = descending_value(d);
    } else {
      std::size_t pick = bad.front();
      if (opts_.seed) {
        pick = bad[std::uniform_int_distribution<std::size_t>(0, bad.size() - 1)(rng_)];
      } else {
        for (std::size_t c : bad)
          if (visits[c].first_visit < visits[pick].first_visit) pick = c;
      }
      const int sign = d.crossings()[pick].sign;
      const Diagram switched = apply_nsign(d, {pick}, {sign > 0 ? SignEntry::minus : SignEntry::plus});
      const Diagram smoothed = apply_nsign(d, {pick}, {SignEntry::zero});
      if (sign > 0) result = t_pow(-2) * eval(switched) + t_pow(-1) * skein_gap() * eval(smoothed);
      else result = t_pow(2) * eval(switched) - t_pow(1) * skein_gap() * eval(smoothed);
    }
    memo_.emplace(key, result);
    return result;
  }

  YokotaOptions opts_;
  std::mt19937_64 rng_;
  std::map<std::string, LaurentPoly> memo_;
};

}  // namespace

LaurentPoly yokota_bracket(const Diagram& d, const YokotaOptions& opts) {
  if (!d.oriented()) throw Error(ErrorCode::invalid_argument, "Yokota bracket needs a coherently oriented diagram");
  Evaluator ev(opts);
  return ev.eval(d);
}

YokotaValue yokota_normalized(const Diagram& d, const YokotaOptions& opts) {
  if (!d.is_theta()) throw Error(ErrorCode::invalid_argument, "normalized Yokota polynomial needs a theta-curve diagram");
  YokotaValue v;
  v.bracket = yokota_bracket(d, opts);
  const WritheSums w = writhe_sums(d);
  v.p = neg_t4_pow(w.normalization_exponent()) * v.bracket;
  const auto pz = compress_exponents(v.p, 3);
  if (!pz) throw Error(ErrorCode::non_cubic_exponent, "P has a t-exponent not divisible by 3: " + v.p.to_string("t"));
  v.pz = *pz;
  return v;
}

}  // namespace thetapoly
