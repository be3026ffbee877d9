#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ktlift/theta.hpp"

namespace ktlift {

enum class Verdict { Match, Vanish, Mismatch, Skipped };

/// Result of one verifier run at one grid point.
struct GammaReport {
    std::string check;
    std::string params;
    std::string candidate; // the F / G label when one is singled out
    int degree = -1;       // Zuckerman degree i, when relevant
    std::int64_t hom_dim = -1;
    Verdict verdict = Verdict::Skipped;
    std::string reason;
    std::vector<std::string> diff;
    int cutoff = 0;
};

/// xi(mu) = (mu padded to p entries) - delta 1_p as an O(n+r)-label,
/// delta = (n - m + 2r)/2 with m = r + mu.rank. Throws NotDominant when an
/// entry goes negative.
OLabel xi(const OLabel& mu, int p, int n, int r);

/// F (x) Wedge^i(C^n (x) C^r) decomposed as an O(n) x O(r) sum:
/// stable_o_branch on the F slot, skew_cauchy + littlewood_restrict on the
/// wedge slot, newell_littlewood slotwise.
KTypeSum gamma_tensor_decomp(const OLabel& F, int i, int n, int r);

/// dim Hom_{O(n) x O(r)}(F (x) Wedge^i p, W) = sum_tau [F (x) Wedge^i p : tau]
/// [W : tau]. When W carries a cutoff, it bounds the producing index size |l|
/// and a W-term's O(n)-partition size equals |l| + w_size_shift; the call is
/// a hard CutoffTooSmall error if some constituent of F (x) Wedge^i p lies
/// beyond that window.
std::int64_t hom_dim_gamma(const OLabel& F, int i, const KTypeSum& W, int n,
                           int r, int w_size_shift = 0);

/// Checks that the degree-pr Hom dimension against Omega(mu) is 1 at
/// F = d^p xi(mu) and 0 at its det twist. Singular infinitesimal character
/// or a combinatorial guard violation yields Skipped.
GammaReport verify_prop32(int p, int n, int r, int rprime, const OLabel& mu,
                          int cutoff);

/// The transfer assembly: sum over O(m-r)-labels mu up to the cutoff, with
/// regular infinitesimal character and dominant xi, of d^p xi(mu) (x) mu as
/// an O(n+r) x O(m-r) sum. Empty when 2p > m-r.
KTypeSum gamma_theta_assembly(int p, int n, int m, int r, int cutoff);

/// Compares gamma_theta_assembly with the one-variable theta K-types on
/// O(n+r) x O(m-r); for 2p > m-r the assembly must vanish.
GammaReport verify_thm11(int p, int n, int m, int r, int cutoff);

/// Transfers Omega(mu) through degree p*t on the (n,t)-block and compares
/// the assembled O(n+t) x O(r-t) multiset with the direct lift.
GammaReport verify_thm12(int p, int n, int r, int rprime, int t,
                         const OLabel& mu, int cutoff);

} // namespace ktlift
