#include "ktlift/zuckerman.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ktlift/errors.hpp"

namespace ktlift {

namespace {

Part trim(std::vector<int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

bool is_guard_kind(ErrKind k) {
    return k == ErrKind::OutsideStableCombinatorics ||
           k == ErrKind::InvalidParams || k == ErrKind::InvalidRank ||
           k == ErrKind::NotDominant;
}

void mark_skipped(GammaReport& rep, const Error& e) {
    if (!is_guard_kind(e.kind())) throw e;
    rep.verdict = Verdict::Skipped;
    rep.reason = e.what();
}

} // namespace

OLabel xi(const OLabel& mu, int p, int n, int r) {
    int m = r + mu.rank;
    if ((n + m) % 2 != 0) fail(ErrKind::InvalidParams, "n + m must be even");
    if (part_depth(mu.lam) > p)
        fail(ErrKind::InvalidParams, "depth(mu) must be <= p");
    int delta = (n - m + 2 * r) / 2;
    std::vector<int> v(p, -delta);
    for (int i = 0; i < p; ++i) v[i] += part_at(mu.lam, i);
    if (p > 0 && v[p - 1] < 0)
        fail(ErrKind::NotDominant,
             "xi(mu) has a negative entry: mu_p < delta = " +
                 std::to_string(delta));
    return OLabel::make(n + r, trim(v), 0);
}

KTypeSum gamma_tensor_decomp(const OLabel& F, int i, int n, int r) {
    if (F.rank != n + r)
        fail(ErrKind::InvalidParams, "F must be an O(n+r) label");
    KTypeSum res_f = stable_o_branch(OLabel::make(n + r, F.lam, 0), n, r);
    if (F.eps) res_f = res_f.twist_slot(0).twist_slot(1);
    KTypeSum wedge;
    for (const auto& [nu, nuc] : skew_cauchy(i, n, r))
        wedge.add_scaled(KTypeSum::outer(littlewood_restrict(nu, n),
                                         littlewood_restrict(nuc, r)),
                         1);
    KTypeSum out;
    for (const auto& [tf, mf] : res_f.terms) {
        for (const auto& [tw, mw] : wedge.terms) {
            KTypeSum prod = KTypeSum::outer(
                newell_littlewood(tf.labels.at(0), tw.labels.at(0)),
                newell_littlewood(tf.labels.at(1), tw.labels.at(1)));
            out.add_scaled(prod, mf * mw);
        }
    }
    return out;
}

std::int64_t hom_dim_gamma(const OLabel& F, int i, const KTypeSum& W, int n,
                           int r, int w_size_shift) {
    if (W.empty()) return 0;
    KTypeSum fp = gamma_tensor_decomp(F, i, n, r);
    if (W.cutoff) {
        int required = 0;
        for (const auto& [t, m] : fp.terms)
            required = std::max(
                required, part_size(t.labels.at(0).lam) - w_size_shift);
        if (*W.cutoff < required)
            fail(ErrKind::CutoffTooSmall,
                 "W cutoff " + std::to_string(*W.cutoff) +
                     " below the required index bound " +
                     std::to_string(required));
    }
    std::int64_t total = 0;
    for (const auto& [t, m] : fp.terms) total += m * W.mult_of(t);
    return total;
}

GammaReport verify_prop32(int p, int n, int r, int rprime, const OLabel& mu,
                          int cutoff) {
    GammaReport rep;
    rep.check = "prop32";
    {
        std::ostringstream os;
        os << "p=" << p << " n=" << n << " r=" << r << " rprime=" << rprime
           << " mu=" << mu.to_string();
        rep.params = os.str();
    }
    rep.cutoff = cutoff;
    try {
        auto [chi, regular] = infchar_theta_lift(p, n, r, rprime, mu);
        if (!regular) {
            rep.verdict = Verdict::Skipped;
            rep.reason =
                "singular infinitesimal character " + chi.to_string();
            return rep;
        }
        OLabel f_correct = det_power_twist(xi(mu, p, n, r), p);
        OLabel f_wrong = det_twist(f_correct);
        int i = p * r;
        rep.degree = i;
        rep.candidate = f_correct.to_string();
        KTypeSum fp_c = gamma_tensor_decomp(f_correct, i, n, r);
        KTypeSum fp_w = gamma_tensor_decomp(f_wrong, i, n, r);
        int m = r + rprime;
        int shift = p * (m - n) / 2;
        int required = 0;
        for (const KTypeSum* fp : {&fp_c, &fp_w})
            for (const auto& [t, mult] : fp->terms)
                required = std::max(required,
                                    part_size(t.labels.at(0).lam) - shift);
        KTypeSum w = omega_ktypes(p, n, r, rprime, mu,
                                  std::max(required, cutoff));
        std::int64_t hom_c = hom_dim_gamma(f_correct, i, w, n, r, shift);
        std::int64_t hom_w = hom_dim_gamma(f_wrong, i, w, n, r, shift);
        rep.hom_dim = hom_c;
        if (hom_c == 1 && hom_w == 0) {
            rep.verdict = Verdict::Match;
        } else {
            rep.verdict = Verdict::Mismatch;
            std::ostringstream os;
            os << "hom(" << f_correct.to_string() << ") = " << hom_c
               << ", hom(" << f_wrong.to_string() << ") = " << hom_w
               << "; expected 1 and 0";
            rep.reason = os.str();
            rep.diff.push_back(rep.reason);
        }
    } catch (const Error& e) {
        mark_skipped(rep, e);
    }
    return rep;
}

KTypeSum gamma_theta_assembly(int p, int n, int m, int r, int cutoff) {
    if ((n + m) % 2 != 0) fail(ErrKind::InvalidParams, "n + m must be even");
    if (!in_stable_range({p, n, m}))
        fail(ErrKind::InvalidParams, "(p,n,m) outside the stable range");
    if (r < 0 || r > m) fail(ErrKind::InvalidParams, "need 0 <= r <= m");
    KTypeSum out;
    out.cutoff = cutoff;
    int rprime = m - r;
    if (2 * p > rprime) return out; // the transfer vanishes
    for (const Part& mu_part :
         partitions_up_to(cutoff, std::min(p, rprime / 2))) {
        OLabel mu = OLabel::make(rprime, mu_part, 0);
        auto [chi, regular] = infchar_theta_lift(p, n, r, rprime, mu);
        if (!regular) continue;
        OLabel x;
        try {
            x = xi(mu, p, n, r);
        } catch (const Error& e) {
            if (e.kind() == ErrKind::NotDominant) continue;
            throw;
        }
        out.add(KTuple{{det_power_twist(x, p), mu}}, 1);
    }
    return out;
}

GammaReport verify_thm11(int p, int n, int m, int r, int cutoff) {
    GammaReport rep;
    rep.check = "thm11";
    {
        std::ostringstream os;
        os << "p=" << p << " n=" << n << " m=" << m << " r=" << r;
        rep.params = os.str();
    }
    rep.cutoff = cutoff;
    try {
        KTypeSum lhs = gamma_theta_assembly(p, n, m, r, cutoff);
        if (2 * p > m - r) {
            if (lhs.empty()) {
                rep.verdict = Verdict::Vanish;
                rep.reason = "assembly vanishes as required for 2p > m-r";
            } else {
                rep.verdict = Verdict::Mismatch;
                rep.reason = "expected a vanishing assembly for 2p > m-r";
                rep.diff.push_back(lhs.to_string());
            }
            return rep;
        }
        KTypeSum rhs = theta_one_ktypes({p, n + r, m - r}, cutoff);
        if (lhs == rhs) {
            rep.verdict = Verdict::Match;
        } else {
            rep.verdict = Verdict::Mismatch;
            rep.reason = "assembly differs from the direct theta expansion";
            rep.diff = diff_sums(lhs, rhs);
        }
    } catch (const Error& e) {
        mark_skipped(rep, e);
    }
    return rep;
}

GammaReport verify_thm12(int p, int n, int r, int rprime, int t,
                         const OLabel& mu, int cutoff) {
    GammaReport rep;
    rep.check = "thm12";
    {
        std::ostringstream os;
        os << "p=" << p << " n=" << n << " r=" << r << " rprime=" << rprime
           << " t=" << t << " mu=" << mu.to_string();
        rep.params = os.str();
    }
    rep.cutoff = cutoff;
    try {
        if (t < 0 || t > r) fail(ErrKind::InvalidParams, "need 0 <= t <= r");
        int m = r + rprime;
        int i = p * t;
        rep.degree = i;
        KTypeSum w = omega_ktypes(p, n, r, rprime, mu, cutoff);
        // grade Res W by its O(r-t)-slot
        std::map<OLabel, KTypeSum> layers;
        for (const auto& [tup, mult] : w.terms) {
            KTypeSum dec = stable_o_branch(tup.labels.at(1), t, r - t);
            for (const auto& [bt, bm] : dec.terms)
                layers[bt.labels.at(1)].add(
                    KTuple{{tup.labels.at(0), bt.labels.at(0)}}, mult * bm);
        }
        for (auto& [nu, layer] : layers) layer.cutoff = cutoff;
        int shift = p * (m - n) / 2;          // O(n)-size = |l| + shift in W
        int win_shift = p * (m - n - 2 * t) / 2; // O(n+t)-size shift in target
        int g_bound = std::max(0, cutoff + win_shift);
        KTypeSum assembled;
        for (const Part& g : partitions_up_to(g_bound, (n + t) / 2)) {
            for (int eps : {0, 1}) {
                OLabel cand = OLabel::make(n + t, g, eps);
                if (cand.eps != eps) continue; // self-associate duplicate
                for (const auto& [nu, layer] : layers) {
                    std::int64_t h =
                        hom_dim_gamma(cand, i, layer, n, t, shift);
                    if (h > 0) assembled.add(KTuple{{cand, nu}}, h);
                }
            }
        }
        if (2 * p > m - t) {
            if (assembled.empty()) {
                rep.verdict = Verdict::Vanish;
                rep.reason = "transfer vanishes as required for 2p > r+r'-t";
            } else {
                rep.verdict = Verdict::Mismatch;
                rep.reason = "expected a vanishing transfer for 2p > r+r'-t";
                rep.diff.push_back(assembled.to_string());
            }
            return rep;
        }
        KTypeSum target = omega_ktypes(p, n + t, r - t, rprime, mu, cutoff);
        // compare inside the shared exact window on the O(n+t)-slot size
        auto windowed = [&](const KTypeSum& s) {
            KTypeSum out;
            for (const auto& [tup, mult] : s.terms)
                if (part_size(tup.labels.at(0).lam) <= g_bound)
                    out.add(tup, mult);
            return out;
        };
        KTypeSum lhs = windowed(assembled);
        KTypeSum rhs = windowed(target);
        if (lhs == rhs) {
            rep.verdict = lhs.empty() ? Verdict::Vanish : Verdict::Match;
            if (lhs.empty()) rep.reason = "both sides vanish";
        } else {
            rep.verdict = Verdict::Mismatch;
            rep.reason = "transferred multiset differs from the direct lift";
            rep.diff = diff_sums(lhs, rhs);
        }
    } catch (const Error& e) {
        mark_skipped(rep, e);
    }
    return rep;
}

} // namespace ktlift
