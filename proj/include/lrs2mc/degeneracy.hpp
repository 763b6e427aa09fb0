#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "lrs2mc/lrs.hpp"
#include "lrs2mc/polynomial.hpp"

namespace lrs2mc {

// One stride-subsequence u_{nL+c} of a source LRS, with the flags the
// downstream reduction needs.
struct SmlComponent {
    std::size_t offset;  // c, 0 <= c < stride
    std::size_t stride;  // L
    Lrs component;
    bool identically_zero;
    bool nondegenerate;
};

inline constexpr std::size_t kDefaultWindowCap = 10000;

// A polynomial whose roots are exactly the ratios alpha/beta over ordered
// root pairs of p (deg p of them equal to 1, from the self-pairs), computed
// as the resultant in y of p(y) and p(x*y). Requires p nonzero with
// deg p >= 1 and p(0) != 0 (callers pass squarefree characteristic
// polynomials of recurrences with a_0 != 0, so zero is never a root).
Polynomial ratio_polynomial(const Polynomial& p);

// The set of m >= 2 such that some ratio of two distinct characteristic
// roots is a primitive m-th root of unity. Empty exactly when the sequence
// is non-degenerate. Depends only on the coefficients.
std::set<unsigned long> degeneracy_orders(const Lrs& l);

// Splits l into stride-L subsequences with L = lcm of the degeneracy orders
// (L = 1 for a non-degenerate input). Every returned component is
// non-degenerate; a degenerate component signals a bug and throws.
std::vector<SmlComponent> sml_decompose(const Lrs& l);

// Least t <= cap such that u_t .. u_{t+k-1} are all nonzero. The caller must
// pass a non-degenerate, not identically zero sequence (established via
// sml_decompose); such a window exists but no a-priori bound on t is
// enforced here, hence the cap.
std::size_t find_nonzero_window(const Lrs& l, std::size_t cap);

}  // namespace lrs2mc
