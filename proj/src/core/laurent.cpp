#include "laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "error.hpp"

namespace thetapoly {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::parse: return "ParseError";
    case ErrorCode::validation: return "ValidationError";
    case ErrorCode::not_divisible: return "NotDivisible";
    case ErrorCode::order_exceeded: return "OrderExceeded";
    case ErrorCode::invalid_sign: return "InvalidSign";
    case ErrorCode::unknown_name: return "UnknownName";
    case ErrorCode::bad_parameter: return "BadParameter";
    case ErrorCode::simplification_incomplete: return "SimplificationIncomplete";
    case ErrorCode::non_cubic_exponent: return "NonCubicExponent";
    case ErrorCode::witness_mismatch: return "WitnessMismatch";
    case ErrorCode::certificate_violation: return "CertificateViolation";
    case ErrorCode::budget_exceeded: return "BudgetExceeded";
    case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "Error";
}

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace_back(0, mpz_class(constant));
}

LaurentPoly LaurentPoly::monomial(mpz_class coeff, int degree) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace_back(degree, std::move(coeff));
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(std::move(t));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Term& t) { return t.second == 0; }),
               merged.end());
  terms_ = std::move(merged);
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw Error(ErrorCode::invalid_argument, "min_degree of zero polynomial");
  return terms_.front().first;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw Error(ErrorCode::invalid_argument, "max_degree of zero polynomial");
  return terms_.back().first;
}

mpz_class LaurentPoly::coefficient(int degree) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), degree,
                             [](const Term& t, int d) { return t.first < d; });
  if (it != terms_.end() && it->first == degree) return it->second;
  return 0;
}

mpz_class LaurentPoly::evaluate_at_one() const {
  mpz_class sum = 0;
  for (const auto& t : terms_) sum += t.second;
  return sum;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

template <typename Op>
std::vector<LaurentPoly::Term> merge_terms(const std::vector<LaurentPoly::Term>& a,
                                           const std::vector<LaurentPoly::Term>& b, Op op) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, op(mpz_class(0), b[j].second));
      ++j;
    } else {
      mpz_class c = op(a[i].second, b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, [](const mpz_class& x, const mpz_class& y) -> mpz_class { return x + y; });
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, [](const mpz_class& x, const mpz_class& y) -> mpz_class { return x - y; });
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  const int lo = lhs.min_degree() + rhs.min_degree();
  const int hi = lhs.max_degree() + rhs.max_degree();
  std::vector<mpz_class> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& a : lhs.terms_)
    for (const auto& b : rhs.terms_) {
      mpz_addmul(dense[static_cast<std::size_t>(a.first + b.first - lo)].get_mpz_t(), a.second.get_mpz_t(),
                 b.second.get_mpz_t());
    }
  LaurentPoly out;
  for (std::size_t k = 0; k < dense.size(); ++k)
    if (dense[k] != 0) out.terms_.emplace_back(static_cast<int>(k) + lo, std::move(dense[k]));
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly& LaurentPoly::operator*=(const mpz_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= scalar;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first += k;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

bool operator<(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.terms_.size() != rhs.terms_.size()) return lhs.terms_.size() < rhs.terms_.size();
  for (std::size_t i = 0; i < lhs.terms_.size(); ++i) {
    if (lhs.terms_[i].first != rhs.terms_[i].first) return lhs.terms_[i].first < rhs.terms_[i].first;
    if (lhs.terms_[i].second != rhs.terms_[i].second) return lhs.terms_[i].second < rhs.terms_[i].second;
  }
  return false;
}

std::string LaurentPoly::to_string(std::string_view var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int deg = it->first;
    mpz_class c = it->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (deg == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << var;
    if (deg != 1) os << "^" << deg;
  }
  return os.str();
}

LaurentPoly neg_var_power(int k) {
  const mpz_class sign = (k % 2 == 0) ? 1 : -1;
  return LaurentPoly::monomial(sign, k);
}

const LaurentPoly& sigma() {
  static const LaurentPoly s = LaurentPoly::from_terms({{-1, 1}, {0, 1}, {1, 1}});
  return s;
}

const LaurentPoly& sigma_minus_sigma_sq() {
  static const LaurentPoly s = sigma() - sigma() * sigma();
  return s;
}

std::optional<LaurentPoly> try_divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw Error(ErrorCode::invalid_argument, "division by the zero polynomial");
  if (p.is_zero()) return LaurentPoly{};
  const int q_span = q.max_degree() - q.min_degree();
  const int q_top = q.max_degree();
  const mpz_class& q_lead = q.terms().back().second;
  std::vector<LaurentPoly::Term> quotient;
  LaurentPoly rem = p;
  while (!rem.is_zero()) {
    if (rem.max_degree() - rem.min_degree() < q_span) return std::nullopt;
    const mpz_class& lead = rem.terms().back().second;
    if (!mpz_divisible_p(lead.get_mpz_t(), q_lead.get_mpz_t())) return std::nullopt;
    mpz_class c = lead / q_lead;
    const int d = rem.max_degree() - q_top;
    rem -= (q * c).shifted(d);
    quotient.emplace_back(d, std::move(c));
  }
  return LaurentPoly::from_terms(std::move(quotient));
}

LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
  auto r = try_divide_exact(p, q);
  if (!r) throw Error(ErrorCode::not_divisible, "(" + p.to_string() + ") is not divisible by (" + q.to_string() + ")");
  return *r;
}

unsigned divisibility_order(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorCode::invalid_argument, "divisibility_order needs nonzero operands");
  if (q.term_count() == 1 && (q.terms()[0].second == 1 || q.terms()[0].second == -1))
    throw Error(ErrorCode::invalid_argument, "divisibility_order by a unit is unbounded");
  unsigned k = 0;
  LaurentPoly cur = p;
  while (auto next = try_divide_exact(cur, q)) {
    cur = std::move(*next);
    ++k;
  }
  return k;
}

LaurentPoly substitute_inverse(const LaurentPoly& p) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(p.term_count());
  for (const auto& t : p.terms()) terms.emplace_back(-t.first, t.second);
  return LaurentPoly::from_terms(std::move(terms));
}

std::optional<LaurentPoly> compress_exponents(const LaurentPoly& p, int factor) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : p.terms()) {
    if (t.first % factor != 0) return std::nullopt;
    terms.emplace_back(t.first / factor, t.second);
  }
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly parse_laurent(std::string_view text, std::string_view var) {
  std::vector<LaurentPoly::Term> terms;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::parse, "bad polynomial '" + std::string(text) + "': " + why);
  };
  auto read_int = [&]() -> std::string {
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start])))) fail("expected integer");
    return std::string(text.substr(start, i - start));
  };
  skip_ws();
  if (text.substr(i) == "0") return {};
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    mpz_class sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip_ws();
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    mpz_class coeff = 1;
    bool have_coeff = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = mpz_class(read_int());
      have_coeff = true;
    }
    int degree = 0;
    if (text.substr(i, 1) == "*") {
      if (!have_coeff) fail("dangling '*'");
      ++i;
    }
    if (text.substr(i, var.size()) == var) {
      i += var.size();
      degree = 1;
      if (text.substr(i, 1) == "^") {
        ++i;
        degree = std::stoi(read_int());
      }
    } else if (!have_coeff) {
      fail("expected term");
    }
    terms.emplace_back(degree, sign * coeff);
  }
  if (terms.empty()) fail("empty input");
  return LaurentPoly::from_terms(std::move(terms));
}

TruncSeries::TruncSeries(unsigned order) : order_(order), coeffs_(order + 1) {}

TruncSeries::TruncSeries(unsigned order, std::vector<mpq_class> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
  coeffs_.resize(order_ + 1);
  for (auto& c : coeffs_) c.canonicalize();
}

const mpq_class& TruncSeries::coefficient(unsigned n) const {
  if (n > order_)
    throw Error(ErrorCode::order_exceeded,
                "coefficient x^" + std::to_string(n) + " exceeds truncation order " + std::to_string(order_));
  return coeffs_[n];
}

std::optional<unsigned> TruncSeries::valuation() const {
  for (unsigned k = 0; k <= order_; ++k)
    if (coeffs_[k] != 0) return k;
  return std::nullopt;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& other) {
  if (order_ != other.order_) throw Error(ErrorCode::invalid_argument, "series truncation orders differ");
  for (unsigned k = 0; k <= order_; ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& other) {
  if (order_ != other.order_) throw Error(ErrorCode::invalid_argument, "series truncation orders differ");
  for (unsigned k = 0; k <= order_; ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const mpq_class& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  if (a.order_ != b.order_) throw Error(ErrorCode::invalid_argument, "series truncation orders differ");
  TruncSeries out(a.order_);
  for (unsigned i = 0; i <= a.order_; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (unsigned j = 0; i + j <= a.order_; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

std::string rational_to_string(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string TruncSeries::to_string(std::string_view var) const {
  std::ostringstream os;
  bool first = true;
  for (unsigned k = 0; k <= order_; ++k) {
    if (coeffs_[k] == 0) continue;
    mpq_class c = coeffs_[k];
    const bool negative = c < 0;
    if (negative) c = -c;
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    if (k == 0) {
      os << rational_to_string(c);
      continue;
    }
    if (c != 1) os << rational_to_string(c) << "*";
    os << var;
    if (k != 1) os << "^" << k;
  }
  if (first) os << "0";
  os << " + O(" << var << "^" << (order_ + 1) << ")";
  return os.str();
}

TruncSeries exp_substitute(const LaurentPoly& p, unsigned order) {
  std::vector<mpq_class> coeffs(order + 1);
  // 1/i! table
  std::vector<mpz_class> factorial(order + 1);
  factorial[0] = 1;
  for (unsigned i = 1; i <= order; ++i) factorial[i] = factorial[i - 1] * i;
  for (const auto& [deg, c] : p.terms()) {
    mpz_class kpow = 1;
    for (unsigned i = 0; i <= order; ++i) {
      mpq_class term(c * kpow, factorial[i]);
      term.canonicalize();
      coeffs[i] += term;
      kpow *= deg;
    }
  }
  return TruncSeries(order, std::move(coeffs));
}

}  // namespace thetapoly
