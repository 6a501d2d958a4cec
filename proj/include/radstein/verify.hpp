#pragma once

#include "radstein/bounds.hpp"

namespace radstein {

// random kernel with `support` canonical tuples on indices 1..n, values in [-1, 1]
Kernel random_kernel(int order, int n, int support, CounterRng& rng);

// randomized algebraic identity suite over exact enumeration: isometry,
// multiplication formula, Taqqu identity, star relations, Stroock round-trip,
// integration by parts, divergence isometry, product rule, iterated gradients,
// and the independent-direction indicator lemma; residuals are maxima over cases
IdentityReport run_identity_suite(std::uint64_t seed, int cases, int max_n);

}  // namespace radstein
