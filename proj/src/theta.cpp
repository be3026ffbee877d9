#include "ktlift/theta.hpp"

#include <algorithm>

#include "ktlift/errors.hpp"

namespace ktlift {

bool in_stable_range(const ThetaParams& t) {
    return 2 * t.p <= std::min(t.n, t.m) && 2 * t.p < std::max(t.n, t.m);
}

namespace {

/// Enumerates the eq-(6) index set: weakly decreasing integer p-tuples with
/// l_p >= lo and |l| <= cutoff, returned as full p-vectors.
std::vector<std::vector<int>> theta_l_range(int p, int lo, int cutoff) {
    std::vector<std::vector<int>> out;
    int base = p * lo;
    if (base > cutoff) return out;
    for (const Part& extra : partitions_up_to(cutoff - base, p)) {
        std::vector<int> l(p, lo);
        for (int i = 0; i < part_depth(extra); ++i) l[i] += extra[i];
        out.push_back(std::move(l));
    }
    return out;
}

Part trim(std::vector<int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

void require_theta_params(const ThetaParams& t) {
    if ((t.n + t.m) % 2 != 0)
        fail(ErrKind::InvalidParams, "n + m must be even");
    if (!in_stable_range(t))
        fail(ErrKind::InvalidParams, "(p,n,m) outside the stable range");
}

OLabel theta_on_label(int p, int n, int m, const std::vector<int>& l) {
    std::vector<int> shifted = l;
    for (int& x : shifted) x += (m - n) / 2;
    return det_power_twist(OLabel::make(n, trim(shifted), 0), p);
}

} // namespace

KTypeSum theta_one_ktypes(const ThetaParams& t, int cutoff) {
    require_theta_params(t);
    int lo = std::max((t.n - t.m) / 2, 0);
    KTypeSum out;
    out.cutoff = cutoff;
    for (const auto& l : theta_l_range(t.p, lo, cutoff)) {
        OLabel on = theta_on_label(t.p, t.n, t.m, l);
        OLabel om = OLabel::make(t.m, trim(l), 0);
        out.add(KTuple{{on, om}}, 1);
    }
    return out;
}

ULabel lowest_type_L(const Part& mu, int p, int rprime) {
    if (part_depth(mu) > std::min(p, rprime))
        fail(ErrKind::InvalidParams, "depth(mu) must be <= min(p, r')");
    ULabel u;
    u.rank = p;
    u.entries = HalfIntVec::from_partition(mu, p).shifted(rprime);
    return u;
}

KTypeSum omega_ktypes(int p, int n, int r, int rprime, const OLabel& mu,
                      int cutoff) {
    int m = r + rprime;
    require_theta_params({p, n, m});
    if (mu.rank != rprime)
        fail(ErrKind::InvalidParams, "mu must be an O(r') label");
    KTypeSum out;
    out.cutoff = cutoff;
    if (part_depth(mu.lam) > p) return out; // Omega(mu) = 0
    int lo = std::max((n - m) / 2, 0);
    for (const auto& l : theta_l_range(p, lo, cutoff)) {
        Part lpart = trim(l);
        KTypeSum dec = stable_o_branch(OLabel::make(m, lpart, 0), r, rprime);
        OLabel on = theta_on_label(p, n, m, l);
        for (const auto& [tuple, mult] : dec.terms) {
            if (tuple.labels.at(1) != mu) continue;
            out.add(KTuple{{on, tuple.labels.at(0)}}, mult);
        }
    }
    return out;
}

std::pair<InfChar, bool> infchar_theta_lift(int p, int n, int r, int rprime,
                                            const OLabel& mu) {
    int m = r + rprime;
    require_theta_params({p, n, m});
    if (mu.rank != rprime)
        fail(ErrKind::InvalidParams, "mu must be an O(r') label");
    if (part_depth(mu.lam) > p)
        fail(ErrKind::InvalidParams, "depth(mu) must be <= p");
    int twice_delta = n - m + 2 * r; // 2*delta
    int big_rank = n + r;
    HalfIntVec v;
    if (rprime >= 2 * p) {
        // (mu - delta 1_p, 0) + rho_{n+r}
        v.twice.assign(big_rank / 2, 0);
        for (int i = 0; i < p; ++i)
            v.twice[i] = 2 * part_at(mu.lam, i) - twice_delta;
        v = v.plus(rho(big_rank));
    } else {
        // (lambda_1..lambda_s, rho_{2 delta} - (2p - r')/2 1_delta)
        int delta = twice_delta / 2;
        if (delta < 0) fail(ErrKind::InvalidParams, "negative delta");
        HalfIntVec lam_part;
        if (rprime >= 2) lam_part = infchar_of(mu).entries;
        HalfIntVec tail;
        if (delta >= 1) tail = rho(2 * delta).shifted(-(2 * p - rprime));
        v = lam_part.concat(tail);
    }
    InfChar c = canonical_infchar(v, big_rank);
    return {c, is_regular(c)};
}

namespace {

/// Removes the canonical entries of `tail` from the multiset `entries`
/// (doubled absolute values); false if not contained.
bool strip_tail(std::vector<int>& entries, const HalfIntVec& tail) {
    for (int t : tail.twice) {
        int a = std::abs(t);
        auto it = std::find(entries.begin(), entries.end(), a);
        if (it == entries.end()) return false;
        entries.erase(it);
    }
    return true;
}

} // namespace

InfChar thm11_infchar_corr(const InfChar& source, int a, int b, int p) {
    if ((a + b) % 2 != 0) fail(ErrKind::InvalidParams, "a + b must be even");
    if (source.algebra_rank != a / 2)
        fail(ErrKind::NotInPattern, "source rank is not floor(a/2)");
    std::vector<int> entries = source.entries.twice;
    HalfIntVec result;
    if (a >= 2 * p) {
        if (b < a)
            fail(ErrKind::NotInPattern, "eq-(1) pattern needs b >= a >= 2p");
        HalfIntVec old_tail, new_tail;
        if (a - 2 * p >= 2) old_tail = rho(a - 2 * p);
        if (b - 2 * p >= 2) new_tail = rho(b - 2 * p);
        if (!strip_tail(entries, old_tail))
            fail(ErrKind::NotInPattern,
                 "source does not contain the rho tail " + old_tail.to_string());
        result.twice = entries;
        result = result.concat(new_tail);
    } else {
        int half = (b - a) / 2;
        if (half < 0) fail(ErrKind::NotInPattern, "eq-(2) pattern needs b >= a");
        HalfIntVec tail;
        if (half >= 1) tail = rho(b - a).shifted(-(2 * p - a));
        result.twice = entries;
        result = result.concat(tail);
    }
    return canonical_infchar(result, b);
}

std::optional<ThetaReduction> outside_stable_reduce(const ThetaParams& t) {
    if (in_stable_range(t))
        fail(ErrKind::InvalidParams, "params already in the stable range");
    if (t.n > t.m) fail(ErrKind::InvalidParams, "callers must arrange n <= m");
    if (t.p <= t.n && t.n <= 2 * t.p - 1 && t.m == t.n + 2)
        return ThetaReduction{OutsideCase::CaseI,
                              {t.n - t.p, t.n, t.n + 2},
                              true};
    if (t.n == t.m && t.n <= 2 * t.p && t.n - 1 - t.p >= 0)
        return ThetaReduction{OutsideCase::CaseII,
                              {t.n - 1 - t.p, t.n, t.n},
                              false};
    return std::nullopt;
}

KTypeSum theta_ktypes_extended(const ThetaParams& t, int cutoff) {
    if (in_stable_range(t)) return theta_one_ktypes(t, cutoff);
    auto red = outside_stable_reduce(t);
    if (!red) fail(ErrKind::InvalidParams, "theta lift is zero at these params");
    KTypeSum base = theta_one_ktypes(red->equivalent, cutoff);
    return red->det_twisted ? base.twist_slot(0) : base;
}

} // namespace ktlift
