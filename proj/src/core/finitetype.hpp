#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "diagram.hpp"
#include "laurent.hpp"

namespace thetapoly {

enum class Invariant { yamada, yokota };
const char* invariant_name(Invariant inv) noexcept;

// R~ in A for yamada, P_z in z for yokota.
LaurentPoly invariant_value(const Diagram& d, Invariant inv);

// Coefficient of A^r / z^r of the polynomial, or of x^n after A = e^x
// (resp. z = e^x) truncated at `trunc`.
struct CoeffFunctional {
  Invariant source = Invariant::yamada;
  bool series = false;
  int index = 0;
  unsigned trunc = 16;

  mpq_class apply(const LaurentPoly& value) const;
  std::string describe() const;
};

// Parses "A^r", "z^r" or "x^n" against the given invariant.
CoeffFunctional parse_coeff(const std::string& text, Invariant inv, unsigned trunc);

struct FtRow {
  NSign eps;
  int plus_count = 0;
  LaurentPoly value;
  mpq_class functional;
};

struct FtReport {
  std::string diagram;
  std::vector<std::size_t> crossings;
  std::string functional;
  mpq_class value;
  std::vector<FtRow> rows;  // 2^|C| rows, eps in lexicographic order with + before -
  // Divisibility order of (sigma - sigma^2) R~(D|C) by 1 - A; yamada only.
  std::optional<unsigned> divisibility;
};

// v(D|C) = sum over eps in {+1,-1}^n of (-1)^{#+} v(D_eps).
FtReport alt_sum(const Diagram& d, const std::vector<std::size_t>& c, const CoeffFunctional& v);
// Same sum for an arbitrary functional of the invariant polynomial.
mpq_class alt_sum(const Diagram& d, const std::vector<std::size_t>& c, Invariant inv,
                  const std::function<mpq_class(const LaurentPoly&)>& v);

// The alternating sum of whole polynomials, R~(D|C) or P_z(D|C).
LaurentPoly poly_alt_sum(const Diagram& d, const std::vector<std::size_t>& c, Invariant inv = Invariant::yamada);

struct EchainRecord {
  LaurentPoly lhs;  // (sigma - sigma^2) R~(D|C), from 2^n normalized values
  LaurentPoly rhs;  // (-A)^{m(D_{+..+})} sum_delta prod G_i(delta) R(D_delta), from 3^n raw values
  int m = 0;
  bool equal = false;
};

// Throws Error(witness_mismatch) when the two sides differ, unless
// `throw_on_mismatch` is false (then check `equal`).
EchainRecord echain_witness(const Diagram& d, const std::vector<std::size_t>& c, bool throw_on_mismatch = true);

struct CertificateEntry {
  std::string diagram;
  std::vector<std::size_t> crossings;
  // Lowest vanishing-required coefficient that was nonzero, if any.
  std::optional<unsigned> violation;
};

struct CertificateReport {
  unsigned n = 0;
  unsigned trunc = 0;
  Invariant source = Invariant::yamada;
  std::vector<CertificateEntry> entries;
  std::size_t violations() const;
};

// Checks that x^0..x^n of the e^x-substituted alternating sum vanish for
// (n+1)-subsets of crossings: all of them when there are at most 200, else a
// seeded sample of 200. Diagrams with fewer than n+1 crossings are skipped.
CertificateReport order_certificate(const std::vector<Diagram>& diagrams, unsigned n, unsigned trunc,
                                    Invariant inv = Invariant::yamada, std::uint64_t seed = 1);

struct TheoremReport {
  FtReport primary;   // v_r on X^r # mirror(T(4n+1))
  FtReport mirrored;  // v_{-r} on mirror(X)^r # T(4n+1)
  bool selection_independent = false;  // a second choice of C_{2n} gave the same values
  bool nonzero() const { return primary.value != 0 && mirrored.value != 0; }
};

// X = mirror(T(5)) # theta_5_1, functional: coefficient of A^{+-r} of R~.
// Throws Error(budget_exceeded) if the diagram has more than `budget` crossings.
TheoremReport theorem1_experiment(int r, int n, int budget = 18);
// X = theta_3_1, functional: coefficient of z^{+-2r} of P_z.
TheoremReport theorem2_experiment(int r, int n, int budget = 18);

}  // namespace thetapoly
