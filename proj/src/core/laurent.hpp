#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace thetapoly {

// Laurent polynomial in one variable with arbitrary-precision integer
// coefficients. Terms are kept sorted by ascending degree and no stored
// coefficient is zero; the zero polynomial has no terms.
class LaurentPoly {
public:
  using Term = std::pair<int, mpz_class>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(mpz_class coeff, int degree);
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  // Both require a nonzero polynomial.
  int min_degree() const;
  int max_degree() const;

  mpz_class coefficient(int degree) const;
  mpz_class evaluate_at_one() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const mpz_class& scalar);

  // Multiplies by x^k.
  LaurentPoly shifted(int k) const;
  LaurentPoly pow(unsigned exponent) const;

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator*(LaurentPoly lhs, const mpz_class& s) { return lhs *= s; }
  friend LaurentPoly operator*(const mpz_class& s, LaurentPoly rhs) { return rhs *= s; }
  friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) { return lhs.terms_ == rhs.terms_; }
  friend bool operator!=(const LaurentPoly& lhs, const LaurentPoly& rhs) { return !(lhs == rhs); }
  // Total order (degree-lexicographic) so polynomials can key ordered containers.
  friend bool operator<(const LaurentPoly& lhs, const LaurentPoly& rhs);

  std::string to_string(std::string_view var = "A") const;

private:
  void normalize();
  std::vector<Term> terms_;
};

// (-x)^k with the convention (-x)^k = (-x^{-1})^{-k} for negative k.
LaurentPoly neg_var_power(int k);

// sigma = A + 1 + A^{-1}
const LaurentPoly& sigma();
// sigma - sigma^2 = -(A^2 + A + 2 + A^{-1} + A^{-2})
const LaurentPoly& sigma_minus_sigma_sq();

// Exact quotient p/q in Z[x, x^{-1}], or nullopt when q does not divide p.
std::optional<LaurentPoly> try_divide_exact(const LaurentPoly& p, const LaurentPoly& q);
// Throws Error(not_divisible) when the division is not exact, Error(invalid_argument) when q == 0.
LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q);
// Largest k with q^k | p. Requires p, q nonzero. Units (±x^j) are rejected.
unsigned divisibility_order(const LaurentPoly& p, const LaurentPoly& q);

// Degree-k coefficient moves to degree -k.
LaurentPoly substitute_inverse(const LaurentPoly& p);
// Replaces x^k by x^{3k}; used for t <- z and the inverse check. Requires all
// exponents divisible by `factor` in the reverse direction (see compress_exponents).
std::optional<LaurentPoly> compress_exponents(const LaurentPoly& p, int factor);

// Parses the rendering produced by to_string: terms like `-3*A^-2`, `A`, `+ 7`.
LaurentPoly parse_laurent(std::string_view text, std::string_view var = "A");

// Power series in x truncated after degree `order`, exact rational coefficients.
class TruncSeries {
public:
  explicit TruncSeries(unsigned order);
  TruncSeries(unsigned order, std::vector<mpq_class> coeffs);

  unsigned order() const noexcept { return order_; }
  const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }
  // Throws Error(order_exceeded) when n > order.
  const mpq_class& coefficient(unsigned n) const;
  // Lowest degree with a nonzero coefficient, or nullopt if the truncation is zero.
  std::optional<unsigned> valuation() const;

  TruncSeries& operator+=(const TruncSeries& other);
  TruncSeries& operator-=(const TruncSeries& other);
  TruncSeries& operator*=(const mpq_class& scalar);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string(std::string_view var = "x") const;

private:
  unsigned order_;
  std::vector<mpq_class> coeffs_;
};

// Substitutes x = e^y (y the series variable): c*x^k -> c * sum_i (k y)^i / i!.
TruncSeries exp_substitute(const LaurentPoly& p, unsigned order);

std::string rational_to_string(const mpq_class& q);

}  // namespace thetapoly
