#include "ktlift/tensor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "ktlift/errors.hpp"

namespace ktlift {

namespace {

int col1(const Part& p) { return part_depth(p); }
int col2(const Part& p) {
    int c = 0;
    for (int r : p)
        if (r >= 2) ++c;
    return c;
}

void require_two_column(const Part& lam, int n, const char* what) {
    if (col1(lam) + col2(lam) > n) {
        std::ostringstream os;
        os << what << ": " << part_to_string(lam)
           << " outside the two-column bound for O(" << n << ")";
        fail(ErrKind::OutsideStableCombinatorics, os.str());
    }
}

/// All sub-partitions of lam with the given size.
std::vector<Part> subpartitions_of_size(const Part& lam, int size) {
    std::vector<Part> out;
    for (const Part& p :
         partitions_of(size, part_depth(lam), lam.empty() ? 0 : lam[0]))
        if (contains(lam, p)) out.push_back(p);
    return out;
}

/// Nonempty even-row partitions contained in lam.
std::vector<Part> even_subpartitions(const Part& lam) {
    std::vector<Part> out;
    for (int s = 2; s <= part_size(lam); s += 2)
        for (const Part& d : subpartitions_of_size(lam, s))
            if (all_rows_even(d)) out.push_back(d);
    return out;
}

/// Column modification for a GL partition read over O(n): while the label is
/// non-standard (lam'_1 + lam'_2 > n), the unique candidate rim strip of
/// length 2*lam'_1 - n anchored at the bottom of the first column is removed.
/// A strip ending mid-row cannot be removed and the term vanishes (sign 0);
/// otherwise each removal contributes (-1)^(columns spanned - 1) together
/// with one det twist.
struct Modified {
    Part lam;
    int sign = 1;   // 0 means the term vanishes
    int twists = 0; // det twists picked up, one per strip removal
};

Modified o_modify(Part lam, int n) {
    Modified out;
    while (col1(lam) + col2(lam) > n) {
        int L = part_depth(lam);
        int h = 2 * L - n; // lam'_1 = L
        int t = -1;
        for (int i = 0; i < L; ++i)
            if (lam[i] + (L - 1 - i) == h) { t = i; break; }
        if (t < 0) return {{}, 0, 0};
        if (lam[t] % 2 == 0) out.sign = -out.sign; // spans lam[t] columns
        ++out.twists;
        Part next(lam.begin(), lam.begin() + t);
        for (int r = t; r + 1 < L; ++r) next.push_back(lam[r + 1] - 1);
        while (!next.empty() && next.back() == 0) next.pop_back();
        lam = std::move(next);
    }
    out.lam = std::move(lam);
    return out;
}

OLabel parse_padded(const Part& mu, int n, const char* what) {
    std::vector<int> arr(n, 0);
    if (part_depth(mu) > n)
        fail(ErrKind::OutsideStableCombinatorics,
             std::string(what) + ": partition deeper than the rank");
    for (int i = 0; i < part_depth(mu); ++i) arr[i] = mu[i];
    auto lab = parse_full_array(arr);
    if (!lab)
        fail(ErrKind::OutsideStableCombinatorics,
             std::string(what) + ": " + part_to_string(mu) +
                 " is not an O(" + std::to_string(n) + ") weight array");
    return *lab;
}

} // namespace

std::vector<Part> sym_cauchy(int N, int p, int q) {
    if (N < 0) fail(ErrKind::InvalidParams, "negative degree");
    return partitions_of(N, std::min(p, q));
}

std::vector<std::pair<Part, Part>> skew_cauchy(int N, int p, int q) {
    if (N < 0 || N > p * q)
        fail(ErrKind::DegreeOutOfRange,
             "wedge degree outside [0, pq]: " + std::to_string(N));
    std::vector<std::pair<Part, Part>> out;
    for (const Part& nu : partitions_of(N, p, q))
        out.emplace_back(nu, conjugate(nu));
    return out;
}

KTypeSum littlewood_restrict(const Part& lam, int n) {
    if (!is_partition(lam)) fail(ErrKind::InvalidParams, "invalid partition");
    require_two_column(lam, n, "littlewood_restrict");
    KTypeSum out;
    std::vector<Part> deltas = {{}};
    for (const Part& d : even_subpartitions(lam)) deltas.push_back(d);
    for (const Part& delta : deltas) {
        for (const Part& mu : subpartitions_of_size(lam, part_size(lam) - part_size(delta))) {
            std::int64_t c = lr_coeff(lam, mu, delta);
            if (c == 0) continue;
            out.add(KTuple{{parse_padded(mu, n, "littlewood_restrict")}}, c);
        }
    }
    return out;
}

KTypeSum newell_littlewood(const OLabel& a, const OLabel& b) {
    if (a.rank != b.rank)
        fail(ErrKind::InvalidParams, "tensor factors must share a rank");
    int n = a.rank;
    const Part& al = a.lam;
    const Part& bl = b.lam;
    // gamma -> multiplicity, before eps bookkeeping
    std::map<Part, std::int64_t> gammas;
    int dmax = std::min(part_size(al), part_size(bl));
    for (int ds = 0; ds <= dmax; ++ds) {
        for (const Part& delta : subpartitions_of_size(al, ds)) {
            if (!contains(bl, delta)) continue;
            for (const Part& eps : subpartitions_of_size(al, part_size(al) - ds)) {
                std::int64_t ca = lr_coeff(al, delta, eps);
                if (ca == 0) continue;
                for (const Part& phi :
                     subpartitions_of_size(bl, part_size(bl) - ds)) {
                    std::int64_t cb = lr_coeff(bl, delta, phi);
                    if (cb == 0) continue;
                    for (const Part& gamma : partitions_of(
                             part_size(eps) + part_size(phi),
                             part_depth(eps) + part_depth(phi),
                             (eps.empty() ? 0 : eps[0]) + (phi.empty() ? 0 : phi[0]))) {
                        std::int64_t cg = lr_coeff(gamma, eps, phi);
                        if (cg) gammas[gamma] += ca * cb * cg;
                    }
                }
            }
        }
    }
    std::map<OLabel, std::int64_t> folded;
    int twist = a.eps + b.eps;
    for (const auto& [gamma, m] : gammas) {
        Modified mod = o_modify(gamma, n);
        if (mod.sign == 0) continue;
        OLabel lab = parse_padded(mod.lam, n, "newell_littlewood");
        folded[det_power_twist(lab, twist + mod.twists)] += mod.sign * m;
    }
    KTypeSum out;
    for (const auto& [lab, m] : folded) {
        if (m < 0)
            throw std::logic_error(
                "newell_littlewood: modification left a negative multiplicity");
        out.add(KTuple{{lab}}, m);
    }
    return out;
}

namespace {

std::map<std::tuple<Part, int, int>, KTypeSum>& branch_memo() {
    static std::map<std::tuple<Part, int, int>, KTypeSum> m;
    return m;
}
std::mutex branch_mutex;

/// Restriction of the GL(a+b) irrep lam to O(a) x O(b) via GL(a) x GL(b).
KTypeSum gl_route(const Part& lam, int a, int b) {
    KTypeSum out;
    for (int ms = 0; ms <= part_size(lam); ++ms) {
        for (const Part& mu : subpartitions_of_size(lam, ms)) {
            for (const Part& nu :
                 subpartitions_of_size(lam, part_size(lam) - ms)) {
                std::int64_t c = lr_coeff(lam, mu, nu);
                if (c == 0) continue;
                KTypeSum pair = KTypeSum::outer(littlewood_restrict(mu, a),
                                                littlewood_restrict(nu, b));
                out.add_scaled(pair, c);
            }
        }
    }
    return out;
}

KTypeSum o_branch_rec(const Part& lam, int a, int b) {
    {
        std::lock_guard<std::mutex> lock(branch_mutex);
        auto it = branch_memo().find({lam, a, b});
        if (it != branch_memo().end()) return it->second;
    }
    // signed accumulation; the result must come out nonnegative
    std::map<KTuple, std::int64_t> acc;
    for (const auto& [t, m] : gl_route(lam, a, b).terms) acc[t] += m;
    for (const Part& delta : even_subpartitions(lam)) {
        for (const Part& sigma :
             subpartitions_of_size(lam, part_size(lam) - part_size(delta))) {
            std::int64_t c = lr_coeff(lam, sigma, delta);
            if (c == 0) continue;
            for (const auto& [t, m] : o_branch_rec(sigma, a, b).terms)
                acc[t] -= c * m;
        }
    }
    KTypeSum out;
    for (const auto& [t, m] : acc) {
        if (m < 0)
            fail(ErrKind::OutsideStableCombinatorics,
                 "negative multiplicity in branching inversion at " +
                     part_to_string(lam));
        if (m > 0) out.add(t, m);
    }
    std::lock_guard<std::mutex> lock(branch_mutex);
    branch_memo().emplace(std::make_tuple(lam, a, b), out);
    return out;
}

} // namespace

KTypeSum stable_o_branch(const OLabel& x, int a, int b) {
    if (x.eps != 0)
        fail(ErrKind::InvalidParams,
             "stable_o_branch takes eps = 0; distribute det twists first");
    if (a + b != x.rank) fail(ErrKind::InvalidParams, "ranks must add up");
    if (a == 0 || b == 0) {
        // restriction to O(rank) x O(0) (or the mirror) is the identity
        OLabel self = OLabel::make(x.rank, x.lam, 0);
        KTypeSum out;
        if (b == 0)
            out.add(KTuple{{self, OLabel::trivial(0)}}, 1);
        else
            out.add(KTuple{{OLabel::trivial(0), self}}, 1);
        return out;
    }
    require_two_column(x.lam, std::min(a, b), "stable_o_branch");
    return o_branch_rec(x.lam, a, b);
}

std::int64_t branch_mult(const Part& l, int m, const OLabel& kappa,
                         const OLabel& mu) {
    if (kappa.rank + mu.rank != m)
        fail(ErrKind::InvalidParams, "branch_mult ranks must add to m");
    KTypeSum dec = stable_o_branch(OLabel::make(m, l, 0), kappa.rank, mu.rank);
    return dec.mult_of(KTuple{{kappa, mu}});
}

void clear_branch_memo() {
    std::lock_guard<std::mutex> lock(branch_mutex);
    branch_memo().clear();
}

} // namespace ktlift
