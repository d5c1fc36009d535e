#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "diagram.hpp"
#include "laurent.hpp"

namespace thetapoly {

struct YokotaOptions {
  // Order in which the edges are walked when deciding which crossings are
  // "bad" (first met on the under-strand).
  std::array<int, 3> edge_order{1, 2, 3};
  // When set, a bad crossing is picked at random instead of the earliest one.
  std::optional<std::uint64_t> seed;
  bool simplify_first = true;
};

// Bracket <D> in t for an oriented diagram (theta curve plus circles). The
// skein relation t<+> - t^-1<-> = (t^3 - t^-3)<0> is applied at bad crossings
// until the diagram is descending; descending diagrams are evaluated in closed
// form from their writhe data.
LaurentPoly yokota_bracket(const Diagram& d, const YokotaOptions& opts = {});

struct YokotaValue {
  LaurentPoly bracket;  // in t
  LaurentPoly p;        // (-t^4)^{n-2s} <D>, in t
  LaurentPoly pz;       // p with t^3 -> z
};

// Throws Error(non_cubic_exponent) if p has a t-exponent not divisible by 3.
YokotaValue yokota_normalized(const Diagram& d, const YokotaOptions& opts = {});

}  // namespace thetapoly
