#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ktlift/ktypesum.hpp"
#include "ktlift/olabel.hpp"
#include "ktlift/partition.hpp"

namespace ktlift {

/// Constituents of Sym^N(C^p (x) C^q) as U(p) x U(q): all partitions of N
/// of depth <= min(p,q), each pairing with itself.
std::vector<Part> sym_cauchy(int N, int p, int q);

/// Constituents of Wedge^N(C^p (x) C^q): pairs (nu, nu') with nu inside the
/// p x q box and nu' its conjugate.
std::vector<std::pair<Part, Part>> skew_cauchy(int N, int p, int q);

/// Littlewood restriction GL(n) -> O(n): sum over even-row delta of
/// c^lam_{mu delta} mu_{O(n)}, with mu read as an eq-(3) array (so
/// second-form constituents come out det-twisted). Validity guard:
/// lam'_1 + lam'_2 <= n, the modification-free regime.
KTypeSum littlewood_restrict(const Part& lam, int n);

/// Newell-Littlewood tensor product of O(n)-labels:
/// N^gamma_{alpha beta} = sum_{delta,eps,phi} c^alpha_{delta eps}
/// c^beta_{delta phi} c^gamma_{eps phi}; det twists add mod 2. A produced
/// gamma with gamma'_1 + gamma'_2 > n is folded onto a standard label (or
/// annihilated) by the signed column-strip modification rule; the folded
/// multiplicities are always nonnegative.
KTypeSum newell_littlewood(const OLabel& a, const OLabel& b);

/// Stable branching O(a+b) -> O(a) x O(b) by triangular inversion against
/// the GL route; x must have eps = 0 (callers distribute det twists).
KTypeSum stable_o_branch(const OLabel& x, int a, int b);

/// Multiplicity m(l, mu, kappa) of kappa_{O(r)} (x) mu_{O(r')} in
/// (l)_{O(m)}, r + r' = m.
std::int64_t branch_mult(const Part& l, int m, const OLabel& kappa,
                         const OLabel& mu);

/// Clears the in-memory stable_o_branch memo (the LR cache is separate).
void clear_branch_memo();

} // namespace ktlift
