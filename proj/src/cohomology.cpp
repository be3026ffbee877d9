#include "ktlift/cohomology.hpp"

#include <algorithm>
#include <sstream>

#include "ktlift/errors.hpp"

namespace ktlift {

namespace {

Part trim(std::vector<int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

void require_range(int p, int n, int m) {
    if (p < 0) fail(ErrKind::InvalidParams, "p must be nonnegative");
    if (!(2 * p <= n && n <= m && 2 * p < m))
        fail(ErrKind::InvalidParams, "need 2p <= n <= m and 2p < m");
    if ((n + m) % 2 != 0) fail(ErrKind::InvalidParams, "n + m must be even");
}

/// d^p (mu + (m-n)/2 1_p) as an O(n)-label.
OLabel onlabel_of(const Part& mu, int p, int n, int m) {
    std::vector<int> v(p, (m - n) / 2);
    for (int i = 0; i < p; ++i) v[i] += part_at(mu, i);
    return det_power_twist(OLabel::make(n, trim(v), 0), p);
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

/// Restriction of the O(m)-slot of an O(n) x O(m) sum to O(r) x O(m-r).
KTypeSum refine_second_slot(const KTypeSum& s, int r, int mr) {
    KTypeSum out;
    for (const auto& [tup, mult] : s.terms) {
        const OLabel& b = tup.labels.at(1);
        KTypeSum dec =
            stable_o_branch(OLabel::make(b.rank, b.lam, 0), r, mr);
        if (b.eps) dec = dec.twist_slot(0).twist_slot(1);
        for (const auto& [bt, bm] : dec.terms)
            out.add(KTuple{{tup.labels.at(0), bt.labels.at(0),
                            bt.labels.at(1)}},
                    mult * bm);
    }
    return out;
}

} // namespace

AqData aq_numerology(int p, int n, int r, int m) {
    if (p < 0 || r < 0) fail(ErrKind::InvalidParams, "negative parameter");
    if (2 * p > n) fail(ErrKind::InvalidParams, "need 2p <= n");
    AqData d;
    d.p = p;
    d.n = n;
    d.r = r;
    d.m = m;
    int t = n / 2 + r / 2;
    std::vector<int> l0(t, 0), l0p(t, 0);
    for (int i = 0; i < p; ++i) {
        l0[i] = 1;
        l0p[i] = p - i;
    }
    d.lambda0 = HalfIntVec::from_ints(l0);
    d.lambda0prime = HalfIntVec::from_ints(l0p);
    d.s0 = p * (n - 2 * p) + p * (p - 1) / 2;
    d.s1 = p * (p - 1) / 2;
    d.s0prime = p * (n - p - 1);
    d.z_sharp_weight.rank = p;
    d.z_sharp_weight.entries =
        HalfIntVec::from_ints(std::vector<int>(p, n + r - p - 1));
    d.det_power_on_O = p;
    return d;
}

ULabel lambda_of_mu(const Part& mu, int p, int n, int r, int m) {
    if (part_depth(mu) > p)
        fail(ErrKind::InvalidParams, "depth(mu) must be <= p");
    if ((m - n) % 2 != 0)
        fail(ErrKind::InvalidParams, "m - n must be even");
    ULabel u;
    u.rank = p;
    u.entries = HalfIntVec::from_partition(mu, p).shifted(m - n - 2 * r);
    return u;
}

std::optional<OLabel> bwb_gamma_v0(const Part& mu, int p, int n, int m,
                                   int i) {
    require_range(p, n, m);
    if (part_depth(mu) > std::min(p, m))
        fail(ErrKind::InvalidParams, "depth(mu) must be <= min(p, m)");
    int s0 = p * (n - 2 * p) + p * (p - 1) / 2;
    if (i != s0) return std::nullopt;
    return onlabel_of(mu, p, n, m);
}

KTypeSum a_lambda_full_ktypes(int p, int n, int m, int cutoff) {
    require_range(p, n, m);
    KTypeSum out;
    out.cutoff = cutoff;
    for (const Part& mu : partitions_up_to(cutoff, p)) {
        KTypeSum piece;
        piece.add(KTuple{{onlabel_of(mu, p, n, m)}}, 1);
        out.add_scaled(KTypeSum::outer(piece, littlewood_restrict(mu, m)), 1);
    }
    return out;
}

std::map<std::pair<Part, Part>, std::int64_t> v_r_layers(const Part& mu,
                                                         int p, int n, int r,
                                                         int cutoff) {
    if (part_depth(mu) > p)
        fail(ErrKind::InvalidParams, "depth(mu) must be <= p");
    if (2 * p > n) fail(ErrKind::InvalidParams, "need 2p <= n");
    std::map<std::pair<Part, Part>, std::int64_t> out;
    int base = part_size(mu);
    for (int s = base; s <= cutoff; ++s) {
        for (const Part& sigma : partitions_of(s, p)) {
            if (!contains(sigma, mu)) continue;
            for (const Part& nu :
                 partitions_of(s - base, std::min(p, r))) {
                std::int64_t c = lr_coeff(sigma, mu, nu);
                if (c) out[{sigma, nu}] = c;
            }
        }
    }
    return out;
}

KTypeSum a_lambda_mu_ktypes(int p, int n, int r, int m, const Part& mu,
                            int cutoff) {
    require_range(p, n, m);
    if (r < 0 || r > m) fail(ErrKind::InvalidParams, "need 0 <= r <= m");
    KTypeSum out;
    out.cutoff = cutoff;
    for (const auto& [layer, c] : v_r_layers(mu, p, n, r, cutoff)) {
        const auto& [sigma, nu] = layer;
        KTypeSum piece;
        piece.add(KTuple{{onlabel_of(sigma, p, n, m)}}, 1);
        out.add_scaled(KTypeSum::outer(piece, littlewood_restrict(nu, r)), c);
    }
    return out;
}

std::pair<KTypeSum, KTypeSum> filtration_sides(int p, int n, int r, int m,
                                               int cutoff) {
    require_range(p, n, m);
    if (r < 0 || r > m) fail(ErrKind::InvalidParams, "need 0 <= r <= m");
    KTypeSum layered;
    for (const Part& mu : partitions_up_to(cutoff, p)) {
        KTypeSum inner = a_lambda_mu_ktypes(p, n, r, m, mu, cutoff);
        layered.add_scaled(
            KTypeSum::outer(inner, littlewood_restrict(mu, m - r)), 1);
    }
    KTypeSum refined =
        refine_second_slot(a_lambda_full_ktypes(p, n, m, cutoff), r, m - r);
    return {layered, refined};
}

GammaReport verify_lemma41(int p, int n, int r, int m, const Part& mu,
                           int cutoff) {
    GammaReport rep;
    rep.check = "lemma41";
    {
        std::ostringstream os;
        os << "p=" << p << " n=" << n << " r=" << r << " m=" << m
           << " mu=" << part_to_string(mu);
        rep.params = os.str();
    }
    rep.cutoff = cutoff;
    try {
        KTypeSum a = a_lambda_mu_ktypes(p, n, r, m, mu, cutoff);
        std::vector<std::string> problems;
        KTuple tau_min{{onlabel_of(mu, p, n, m), OLabel::trivial(r)}};
        std::int64_t mult = a.mult_of(tau_min);
        rep.hom_dim = mult;
        rep.candidate = tau_min.to_string();
        if (mult != 1)
            problems.push_back("minimal type " + tau_min.to_string() +
                               " has multiplicity " + std::to_string(mult));
        OLabel shape_base = onlabel_of(mu, p, n, m);
        for (const auto& [tup, c] : a.terms) {
            const OLabel& on = tup.labels.at(0);
            bool ok = on.eps == shape_base.eps && part_depth(on.lam) <= p;
            if (ok)
                for (int i = 0; i < p; ++i)
                    if (part_at(on.lam, i) <
                        part_at(mu, i) + (m - n) / 2)
                        ok = false;
            if (!ok)
                problems.push_back("O(n)-constituent " + on.to_string() +
                                   " is not of the d^p(mu+kappa) shape");
        }
        auto layers = v_r_layers(mu, p, n, r, cutoff);
        auto it = layers.find({mu, {}});
        if (it == layers.end() || it->second != 1)
            problems.push_back("(mu, empty) layer multiplicity is not 1");
        for (const auto& [layer, c] : layers)
            if (!contains(layer.first, mu))
                problems.push_back("layer sigma " +
                                   part_to_string(layer.first) +
                                   " does not contain mu");
        if (problems.empty()) {
            rep.verdict = Verdict::Match;
        } else {
            rep.verdict = Verdict::Mismatch;
            rep.reason = "structural checks failed";
            rep.diff = problems;
        }
    } catch (const Error& e) {
        mark_skipped(rep, e);
    }
    return rep;
}

GammaReport verify_thm14(int p, int n, int r, int m, const Part& mu,
                         int cutoff) {
    GammaReport rep;
    rep.check = "thm14";
    {
        std::ostringstream os;
        os << "p=" << p << " n=" << n << " r=" << r << " m=" << m
           << " mu=" << part_to_string(mu);
        rep.params = os.str();
    }
    rep.cutoff = cutoff;
    try {
        require_range(p, n, m);
        if (r < 0 || r > m) fail(ErrKind::InvalidParams, "need 0 <= r <= m");
        if (part_at(mu, p) > 0) {
            rep.verdict = Verdict::Vanish;
            rep.reason = "mu_{p+1} > 0: both modules vanish";
            return rep;
        }
        int rprime = m - r;
        OLabel mu_label = OLabel::make(rprime, mu, 0);
        KTypeSum w = omega_ktypes(p, n, r, rprime, mu_label, cutoff);
        KTypeSum a = a_lambda_mu_ktypes(p, n, r, m, mu, cutoff);
        std::vector<std::string> problems;
        if (!contained_in(w, a))
            problems.push_back(
                "lift K-types are not contained in the A(lambda) K-types");
        KTuple tau_min{{onlabel_of(mu, p, n, m), OLabel::trivial(r)}};
        rep.candidate = tau_min.to_string();
        std::int64_t mw = w.mult_of(tau_min);
        std::int64_t ma = a.mult_of(tau_min);
        rep.hom_dim = mw;
        if (mw != 1 || ma != 1)
            problems.push_back("minimal type multiplicities are " +
                               std::to_string(mw) + " and " +
                               std::to_string(ma) + ", expected 1 and 1");
        InfChar lift_chi = infchar_theta_lift(p, n, r, rprime, mu_label).first;
        HalfIntVec lam = lambda_of_mu(mu, p, n, r, m).entries;
        HalfIntVec padded = lam.concat(HalfIntVec::from_ints(
            std::vector<int>((n + r) / 2 - p, 0)));
        InfChar aq_chi = canonical_infchar(padded.plus(rho(n + r)), n + r);
        if (!(lift_chi == aq_chi))
            problems.push_back("infinitesimal characters differ: " +
                               lift_chi.to_string() + " vs " +
                               aq_chi.to_string());
        if (problems.empty()) {
            rep.verdict = Verdict::Match;
        } else {
            rep.verdict = Verdict::Mismatch;
            rep.reason = "theorem checks failed";
            rep.diff = problems;
        }
    } catch (const Error& e) {
        mark_skipped(rep, e);
    }
    return rep;
}

} // namespace ktlift
