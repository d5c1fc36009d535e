#pragma once

#include <cstdint>
#include <string>

namespace thetapoly::testing {

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0 && cases > 0; }
};

// Each suite runs `cases` seeded random cases and never throws; an exception
// inside a case counts as a failure.
PropertyResult laurent_ring_axioms(std::uint64_t seed, int cases);
PropertyResult exp_substitute_morphism(std::uint64_t seed, int cases);
PropertyResult planarity_preservation(std::uint64_t seed, int cases);
PropertyResult evaluator_order_independence(std::uint64_t seed, int cases);
PropertyResult alt_sum_linearity(std::uint64_t seed, int cases);

}  // namespace thetapoly::testing
