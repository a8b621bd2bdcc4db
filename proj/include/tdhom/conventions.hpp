#pragma once

#include <cstddef>

#include "tdhom/permutation.hpp"

// Permutations that appear in the structure identities, in the action
// convention of Permutation: (h∘σ)(x_0, …) = h(x_{σ(0)}, …).
//
// Cyclic permutations that only ever appear summed over their powers (the
// Jacobi cycle) are insensitive to direction. The Poisson, rewritten LRb and
// Hom(C,B)-linearity permutations are not; each is fixed here so that the
// classical identity holds with it, and every twisted check reuses the same
// constant.

namespace tdhom::conventions {

/// Swap of the first two arguments inside S_n (τ, τ⊗1, (1 2) ∈ S_3).
inline Permutation swap_first_two(std::size_t n) { return Permutation::from_cycles(n, {{0, 1}}); }

/// Jacobi cycle ξ: φ∘(1⊗φ)∘ξ(x, y, z) = [y, [z, x]].
inline Permutation jacobi_cycle() { return Permutation::from_cycles(3, {{0, 1, 2}}); }

/// Cycle in the Poisson derivation rule [a, bc] = c[a, b] + b[a, c]:
/// μ∘(1⊗φ)∘ξ(a, b, c) = μ(c, φ(a, b)).
inline Permutation poisson_cycle() { return Permutation({2, 0, 1}); }

/// Cycle in the skew-rewritten LRb: μ∘(ψ⊗1)∘σ(a, x, y) = μ(ψ(y, a), x).
inline Permutation lr_rewrite_cycle() { return Permutation({2, 0, 1}); }

/// Twist for Hom(C,B)-linearity in slot i (1-based, 1 ≤ i ≤ n) of an
/// n-cochain. Arguments are (g_1, …, g_{i−1}, β, g_i, …, g_n); the result π
/// satisfies (h∘π)(those arguments) = h(β, g_1, …, g_n).
inline Permutation blinear_twist(std::size_t n, std::size_t i) {
  std::vector<std::size_t> v(n + 1);
  v[0] = i - 1;
  for (std::size_t k = 1; k <= n; ++k) v[k] = k <= i - 1 ? k - 1 : k;
  return Permutation(std::move(v));
}

}  // namespace tdhom::conventions
