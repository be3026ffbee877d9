#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "ktlift/zuckerman.hpp"

namespace ktlift {

/// Numerology of the theta-stable parabolic attached to (p, n, r, m).
struct AqData {
    int p = 0, n = 0, r = 0, m = 0;
    HalfIntVec lambda0;      // (1_p, 0_{t-p}), t = floor(n/2) + floor(r/2)
    HalfIntVec lambda0prime; // (p, p-1, ..., 1, 0_{t-p})
    int s0 = 0;              // p(n-2p) + p(p-1)/2
    int s1 = 0;              // p(p-1)/2
    int s0prime = 0;         // p(n-p-1); always s0 + s1
    ULabel z_sharp_weight;   // det^(n+r-p-1) on U(p) from the top wedge
    int det_power_on_O = 0;  // det^p on the orthogonal Levi factor
};

AqData aq_numerology(int p, int n, int r, int m);

/// lambda_mu = (mu_1..mu_p) + ((m-n-2r)/2) 1_p as a U(p)-weight.
ULabel lambda_of_mu(const Part& mu, int p, int n, int r, int m);

/// Degree-graded Bott evaluation of the bottom layer V_0(mu): nonzero only
/// in degree s0, where it is d^p (mu + (m-n)/2 1_p) over O(n).
std::optional<OLabel> bwb_gamma_v0(const Part& mu, int p, int n, int m, int i);

/// K-types of A(lambda) at r = 0: sum over mu of depth <= p and size <= cutoff
/// of d^p (mu + (m-n)/2 1_p) (x) littlewood_restrict(mu, m).
KTypeSum a_lambda_full_ktypes(int p, int n, int m, int cutoff);

/// Graded layers of V_r(mu): pairs (sigma, nu) with multiplicity
/// lr_coeff(sigma, mu, nu), depth(nu) <= min(p, r), |sigma| <= cutoff.
std::map<std::pair<Part, Part>, std::int64_t> v_r_layers(const Part& mu, int p,
                                                         int n, int r,
                                                         int cutoff);

/// K-types of A(lambda_mu) over O(n) x O(r): sum over the layers of
/// lr_coeff(sigma, mu, nu) d^p (sigma + (m-n)/2 1_p) (x)
/// littlewood_restrict(nu, r).
KTypeSum a_lambda_mu_ktypes(int p, int n, int r, int m, const Part& mu,
                            int cutoff);

/// Both sides of the filtration identity: the layered assembly
/// sum_mu a_lambda_mu_ktypes (x) littlewood_restrict(mu, m-r) versus the
/// O(r) x O(m-r) refinement of a_lambda_full_ktypes, as O(n) x O(r) x O(m-r)
/// sums over the same index window.
std::pair<KTypeSum, KTypeSum> filtration_sides(int p, int n, int r, int m,
                                               int cutoff);

/// Structural checks on a_lambda_mu_ktypes and v_r_layers: unique minimal
/// type, the d^p (mu + kappa + shift) shape of every O(n)-constituent, and
/// the layer pins.
GammaReport verify_lemma41(int p, int n, int r, int m, const Part& mu,
                           int cutoff);

/// Containment of the lift's K-types in A(lambda_mu)'s, minimal-type
/// multiplicities, and infinitesimal-character equality.
GammaReport verify_thm14(int p, int n, int r, int m, const Part& mu,
                         int cutoff);

} // namespace ktlift
