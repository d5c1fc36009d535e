#pragma once

#include <random>

#include "diagram.hpp"

namespace thetapoly::testing {

// Random theta-curve diagram: starts from the trivial theta and pushes random
// arcs across each other inside faces ("finger moves"), then switches random
// crossings. Each finger adds two crossings, so the result has an even number
// of crossings, at most 2 * max_fingers, and is never simplified.
Diagram random_theta(std::mt19937_64& rng, int max_fingers);

// Same, but retries until the diagram has at least one crossing.
Diagram random_theta_nonempty(std::mt19937_64& rng, int max_fingers);

}  // namespace thetapoly::testing
