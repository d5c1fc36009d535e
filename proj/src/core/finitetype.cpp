#include "finitetype.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "error.hpp"
#include "yamada.hpp"
#include "yokota.hpp"

namespace thetapoly {

const char* invariant_name(Invariant inv) noexcept { return inv == Invariant::yamada ? "yamada" : "yokota"; }

LaurentPoly invariant_value(const Diagram& d, Invariant inv) {
  if (inv == Invariant::yamada) return yamada_normalized(d).normalized;
  return yokota_normalized(d).pz;
}

mpq_class CoeffFunctional::apply(const LaurentPoly& value) const {
  if (!series) return mpq_class(value.coefficient(index));
  if (index < 0) throw Error(ErrorCode::invalid_argument, "series coefficient index must be >= 0");
  return exp_substitute(value, trunc).coefficient(static_cast<unsigned>(index));
}

std::string CoeffFunctional::describe() const {
  std::string var = series ? "x" : (source == Invariant::yamada ? "A" : "z");
  std::string s = std::string(invariant_name(source)) + " " + var + "^" + std::to_string(index);
  if (series) s += " (trunc " + std::to_string(trunc) + ")";
  return s;
}

CoeffFunctional parse_coeff(const std::string& text, Invariant inv, unsigned trunc) {
  CoeffFunctional f;
  f.source = inv;
  f.trunc = trunc;
  if (text.empty()) throw Error(ErrorCode::invalid_argument, "empty --coeff");
  const char var = text[0];
  if (var == 'x') f.series = true;
  else if (var == 'A' && inv == Invariant::yamada) f.series = false;
  else if (var == 'z' && inv == Invariant::yokota) f.series = false;
  else
    throw Error(ErrorCode::invalid_argument,
                "--coeff '" + text + "' does not fit invariant " + invariant_name(inv) + " (use A^r, z^r or x^n)");
  if (text.size() == 1) {
    f.index = 1;
  } else {
    if (text[1] != '^') throw Error(ErrorCode::invalid_argument, "--coeff expects VAR^INT, got '" + text + "'");
    const char* b = text.data() + 2;
    const char* e = text.data() + text.size();
    const auto [p, ec] = std::from_chars(b, e, f.index);
    if (ec != std::errc() || p != e) throw Error(ErrorCode::invalid_argument, "bad exponent in --coeff '" + text + "'");
  }
  if (f.series && (f.index < 0 || static_cast<unsigned>(f.index) > trunc))
    throw Error(ErrorCode::order_exceeded,
                "x^" + std::to_string(f.index) + " is outside truncation order " + std::to_string(trunc));
  return f;
}

namespace {

// Invariant values of the D_eps family, keyed by canonical rendering.
class ValueCache {
public:
  explicit ValueCache(Invariant inv) : inv_(inv) {}
  const LaurentPoly& operator()(const Diagram& d) {
    auto key = render_diagram(d);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(std::move(key), invariant_value(d, inv_)).first;
    return it->second;
  }

private:
  Invariant inv_;
  std::map<std::string, LaurentPoly> cache_;
};

NSign eps_of(std::size_t mask, std::size_t n) {
  NSign eps(n);
  for (std::size_t i = 0; i < n; ++i)
    eps[i] = (mask >> (n - 1 - i)) & 1U ? SignEntry::minus : SignEntry::plus;
  return eps;
}

int plus_count(const NSign& eps) {
  return static_cast<int>(std::count(eps.begin(), eps.end(), SignEntry::plus));
}

void check_subset(const Diagram& d, const std::vector<std::size_t>& c) {
  if (c.size() > 20) throw Error(ErrorCode::invalid_argument, "crossing set too large for 2^n enumeration");
  if (std::set<std::size_t>(c.begin(), c.end()).size() != c.size())
    throw Error(ErrorCode::invalid_argument, "crossing set has repeats");
  for (std::size_t x : c)
    if (x >= d.crossing_count())
      throw Error(ErrorCode::invalid_argument, "crossing index " + std::to_string(x) + " out of range for '" +
                                                   d.name() + "' with " + std::to_string(d.crossing_count()) +
                                                   " crossings");
}

LaurentPoly poly_alt_sum_cached(const Diagram& d, const std::vector<std::size_t>& c, ValueCache& cache) {
  LaurentPoly total;
  for (std::size_t mask = 0; mask < (std::size_t{1} << c.size()); ++mask) {
    const NSign eps = eps_of(mask, c.size());
    const LaurentPoly& v = cache(apply_nsign(d, c, eps));
    if (plus_count(eps) % 2 == 0) total += v;
    else total -= v;
  }
  return total;
}

}  // namespace

FtReport alt_sum(const Diagram& d, const std::vector<std::size_t>& c, const CoeffFunctional& v) {
  check_subset(d, c);
  ValueCache cache(v.source);
  FtReport rep;
  rep.diagram = d.name();
  rep.crossings = c;
  rep.functional = v.describe();
  LaurentPoly poly;
  for (std::size_t mask = 0; mask < (std::size_t{1} << c.size()); ++mask) {
    FtRow row;
    row.eps = eps_of(mask, c.size());
    row.plus_count = plus_count(row.eps);
    row.value = cache(apply_nsign(d, c, row.eps));
    row.functional = v.apply(row.value);
    if (row.plus_count % 2 == 0) {
      rep.value += row.functional;
      poly += row.value;
    } else {
      rep.value -= row.functional;
      poly -= row.value;
    }
    rep.rows.push_back(std::move(row));
  }
  if (v.source == Invariant::yamada) {
    const LaurentPoly scaled = sigma_minus_sigma_sq() * poly;
    rep.divisibility = scaled.is_zero() ? std::nullopt : std::optional(divisibility_order(scaled, LaurentPoly(1) - LaurentPoly::monomial(1, 1)));
  }
  return rep;
}

mpq_class alt_sum(const Diagram& d, const std::vector<std::size_t>& c, Invariant inv,
                  const std::function<mpq_class(const LaurentPoly&)>& v) {
  check_subset(d, c);
  ValueCache cache(inv);
  mpq_class total;
  for (std::size_t mask = 0; mask < (std::size_t{1} << c.size()); ++mask) {
    const NSign eps = eps_of(mask, c.size());
    const mpq_class x = v(cache(apply_nsign(d, c, eps)));
    if (plus_count(eps) % 2 == 0) total += x;
    else total -= x;
  }
  return total;
}

LaurentPoly poly_alt_sum(const Diagram& d, const std::vector<std::size_t>& c, Invariant inv) {
  check_subset(d, c);
  ValueCache cache(inv);
  return poly_alt_sum_cached(d, c, cache);
}

EchainRecord echain_witness(const Diagram& d, const std::vector<std::size_t>& c, bool throw_on_mismatch) {
  check_subset(d, c);
  if (c.size() > 12) throw Error(ErrorCode::invalid_argument, "crossing set too large for 3^n enumeration");
  EchainRecord rec;
  rec.lhs = sigma_minus_sigma_sq() * poly_alt_sum(d, c, Invariant::yamada);

  const std::size_t n = c.size();
  const LaurentPoly a = LaurentPoly::monomial(1, 1);
  const LaurentPoly a_minus_inv = a - LaurentPoly::monomial(1, -1);
  // Factors for delta_i = -1 (per crossing), 0 and infinity.
  std::vector<LaurentPoly> f_minus;
  for (std::size_t x : c) {
    const int j = classify_crossing(d, x) == CrossingKind::self ? 4 : -2;
    f_minus.push_back(LaurentPoly::monomial(1, j) - LaurentPoly(1));
  }
  const LaurentPoly f_zero = -a_minus_inv;
  const LaurentPoly f_inf = a_minus_inv;

  rec.m = writhe_sums(apply_nsign(d, c, NSign(n, SignEntry::plus))).normalization_exponent();

  std::size_t states = 1;
  for (std::size_t i = 0; i < n; ++i) states *= 3;
  LaurentPoly sum;
  NSign delta(n);
  for (std::size_t s = 0; s < states; ++s) {
    LaurentPoly weight(1);
    std::size_t code = s;
    for (std::size_t i = n; i-- > 0;) {
      switch (code % 3) {
        case 0:
          delta[i] = SignEntry::minus;
          weight *= f_minus[i];
          break;
        case 1:
          delta[i] = SignEntry::zero;
          weight *= f_zero;
          break;
        default:
          delta[i] = SignEntry::infinity;
          weight *= f_inf;
          break;
      }
      code /= 3;
    }
    sum += weight * yamada_raw(apply_nsign(d, c, delta));
  }
  rec.rhs = neg_var_power(rec.m) * sum;
  rec.equal = rec.lhs == rec.rhs;
  if (!rec.equal && throw_on_mismatch)
    throw Error(ErrorCode::witness_mismatch, "E-chain sides differ on '" + d.name() + "': " + rec.lhs.to_string() +
                                                 " vs " + rec.rhs.to_string());
  return rec;
}

std::size_t CertificateReport::violations() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const CertificateEntry& e) { return e.violation.has_value(); }));
}

namespace {

std::vector<std::vector<std::size_t>> all_subsets(std::size_t total, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= total; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

double binom(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

std::vector<std::vector<std::size_t>> choose_subsets(std::size_t total, std::size_t k, std::uint64_t seed) {
  constexpr std::size_t kLimit = 200;
  if (binom(total, k) <= kLimit) return all_subsets(total, k);
  std::mt19937_64 rng(seed);
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> idx(total);
  std::iota(idx.begin(), idx.end(), 0);
  while (out.size() < kLimit) {
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<std::size_t> pick(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(pick.begin(), pick.end());
    if (seen.insert(pick).second) out.push_back(pick);
  }
  return out;
}

}  // namespace

CertificateReport order_certificate(const std::vector<Diagram>& diagrams, unsigned n, unsigned trunc, Invariant inv,
                                    std::uint64_t seed) {
  if (trunc < n) throw Error(ErrorCode::order_exceeded, "truncation order below certificate order");
  CertificateReport rep;
  rep.n = n;
  rep.trunc = trunc;
  rep.source = inv;
  for (const auto& d : diagrams) {
    if (d.crossing_count() < n + 1) continue;
    ValueCache cache(inv);
    for (auto& c : choose_subsets(d.crossing_count(), n + 1, seed)) {
      CertificateEntry e;
      e.diagram = d.name();
      const TruncSeries s = exp_substitute(poly_alt_sum_cached(d, c, cache), trunc);
      for (unsigned k = 0; k <= n; ++k) {
        if (s.coefficient(k) != 0) {
          e.violation = k;
          break;
        }
      }
      e.crossings = std::move(c);
      rep.entries.push_back(std::move(e));
    }
  }
  return rep;
}

namespace {

struct Built {
  Diagram diagram;
  std::vector<std::size_t> first;  // first 2n crossings of the twist factor
  std::vector<std::size_t> last;   // last 2n
};

Built build_family(const Diagram& x, int r, const Diagram& twist, int n) {
  Built b;
  std::vector<std::size_t> twist_map(twist.crossing_count());
  std::iota(twist_map.begin(), twist_map.end(), 0);
  if (r == 0) {
    b.diagram = twist;
  } else {
    Diagram acc = x;
    for (int i = 1; i < r; ++i) acc = connected_sum(acc, x);
    auto sum = connected_sum_mapped(acc, twist);
    b.diagram = std::move(sum.diagram);
    twist_map = std::move(sum.right_crossings);
  }
  const auto k = static_cast<std::size_t>(2 * n);
  b.first.assign(twist_map.begin(), twist_map.begin() + static_cast<std::ptrdiff_t>(k));
  b.last.assign(twist_map.end() - static_cast<std::ptrdiff_t>(k), twist_map.end());
  return b;
}

TheoremReport run_theorem(const Diagram& x, int r, int n, int budget, Invariant inv, int index) {
  if (r < 0) throw Error(ErrorCode::bad_parameter, "r must be >= 0");
  if (n < 1) throw Error(ErrorCode::bad_parameter, "n must be >= 1");
  const long size = static_cast<long>(r) * static_cast<long>(x.crossing_count()) + 4L * n + 1;
  if (size > budget)
    throw Error(ErrorCode::budget_exceeded, "experiment needs " + std::to_string(size) + " crossings, budget is " +
                                                std::to_string(budget));
  const Diagram t = twist_family(4 * n + 1);
  TheoremReport rep;
  CoeffFunctional f{inv, false, index, 0};
  const Built fwd = build_family(x, r, mirror(t), n);
  rep.primary = alt_sum(fwd.diagram, fwd.first, f);
  const mpq_class again = alt_sum(fwd.diagram, fwd.last, f).value;

  f.index = -index;
  const Built bwd = build_family(mirror(x), r, t, n);
  rep.mirrored = alt_sum(bwd.diagram, bwd.first, f);
  const mpq_class again_m = alt_sum(bwd.diagram, bwd.last, f).value;
  rep.selection_independent = again == rep.primary.value && again_m == rep.mirrored.value;
  return rep;
}

}  // namespace

TheoremReport theorem1_experiment(int r, int n, int budget) {
  const Diagram g = connected_sum(mirror(twist_family(5)), catalog("theta_5_1")).renamed("G");
  return run_theorem(g, r, n, budget, Invariant::yamada, r);
}

TheoremReport theorem2_experiment(int r, int n, int budget) {
  return run_theorem(catalog("theta_3_1"), r, n, budget, Invariant::yokota, 2 * r);
}

}  // namespace thetapoly
