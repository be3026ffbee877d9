#pragma once

#include <optional>
#include <utility>

#include "ktlift/ktypesum.hpp"
#include "ktlift/tensor.hpp"
#include "ktlift/weights.hpp"

namespace ktlift {

struct ThetaParams {
    int p = 0, n = 0, m = 0;
    bool operator==(const ThetaParams&) const = default;
};

/// Lowest U(p)-type label: a weakly decreasing half-integer vector.
struct ULabel {
    int rank = 0;
    HalfIntVec entries;
    bool operator==(const ULabel&) const = default;
};

/// 2p <= min(n,m) and 2p < max(n,m); excludes m = n = 2p.
bool in_stable_range(const ThetaParams& t);

/// K-types of the theta lift of the trivial character: terms
/// d_n^p (l + (m-n)/2 1_p) (x) (l), over l_1 >= ... >= l_p >= max((n-m)/2, 0)
/// with |l| <= cutoff. Multiplicity free.
KTypeSum theta_one_ktypes(const ThetaParams& t, int cutoff);

/// Lowest U(p)-type of L(mu): (mu padded to p) + (rprime/2) 1_p.
ULabel lowest_type_L(const Part& mu, int p, int rprime);

/// K-types of Omega(mu) = theta_p^{n,r}(L(mu)): the eq-(6) l-sum with the
/// O(m)-slot branched to O(r) x O(rprime) and the mu-isotypic part kept.
/// Empty sum when the lift vanishes (up to the cutoff).
KTypeSum omega_ktypes(int p, int n, int r, int rprime, const OLabel& mu,
                      int cutoff);

/// Infinitesimal character of the lift plus its regularity flag.
std::pair<InfChar, bool> infchar_theta_lift(int p, int n, int r, int rprime,
                                            const OLabel& mu);

/// The theta correspondence of infinitesimal characters between so(a) and
/// so(b): strips a canonical rho-tail and re-attaches the partner tail.
InfChar thm11_infchar_corr(const InfChar& source, int a, int b, int p);

enum class OutsideCase { CaseI, CaseII };

struct ThetaReduction {
    OutsideCase label;
    ThetaParams equivalent;
    bool det_twisted;
};

/// Reduction of a non-stable-range lift to a stable-range one (n <= m);
/// nullopt when the lift is zero.
std::optional<ThetaReduction> outside_stable_reduce(const ThetaParams& t);

/// K-types for arbitrary (p,n,m) with n <= m: stable range directly,
/// otherwise through outside_stable_reduce and the stated det twist on the
/// O(n)-slot. Throws InvalidParams when the lift is zero.
KTypeSum theta_ktypes_extended(const ThetaParams& t, int cutoff);

} // namespace ktlift
