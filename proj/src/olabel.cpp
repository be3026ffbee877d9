#include "ktlift/olabel.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "ktlift/errors.hpp"

namespace ktlift {

OLabel OLabel::make(int rank, Part lam, int eps) {
    if (rank < 0) fail(ErrKind::InvalidRank, "negative rank");
    if (!is_partition(lam)) fail(ErrKind::InvalidParams, "invalid partition");
    if (part_depth(lam) > rank / 2)
        fail(ErrKind::InvalidParams, "partition depth exceeds floor(n/2) for O(" +
                                         std::to_string(rank) + ")");
    if (eps != 0 && eps != 1) fail(ErrKind::InvalidParams, "eps must be 0 or 1");
    if (rank % 2 == 0 && part_depth(lam) == rank / 2) eps = 0; // self-associate
    OLabel x;
    x.rank = rank;
    x.lam = std::move(lam);
    x.eps = eps;
    return x;
}

std::string OLabel::to_string() const {
    std::string s = eps ? "d*" : "";
    return s + part_to_string(lam);
}

OLabel olabel_from_string(const std::string& s, int rank) {
    std::string body = s;
    int eps = 0;
    if (body.rfind("d*", 0) == 0) {
        eps = 1;
        body = body.substr(2);
    }
    return OLabel::make(rank, part_from_string(body), eps);
}

std::vector<int> to_full_array(const OLabel& x) {
    std::vector<int> arr(x.rank, 0);
    int k = part_depth(x.lam);
    for (int i = 0; i < k; ++i) arr[i] = x.lam[i];
    if (x.eps == 1)
        for (int i = k; i < x.rank - k; ++i) arr[i] = 1;
    return arr;
}

std::optional<OLabel> parse_full_array(const std::vector<int>& arr) {
    int n = static_cast<int>(arr.size());
    if (n == 0) return OLabel::trivial(0);
    for (int i = 0; i < n; ++i) {
        if (arr[i] < 0) return std::nullopt;
        if (i + 1 < n && arr[i] < arr[i + 1]) return std::nullopt;
    }
    int z = 0;
    while (z < n && arr[n - 1 - z] == 0) ++z;
    int nz = n - z;
    if (nz <= n / 2) {
        Part lam(arr.begin(), arr.begin() + nz);
        return OLabel::make(n, lam, 0);
    }
    // second array form: (a_1..a_k, ones, zeros) with k = number of zeros
    int k = z;
    if (n - 2 * k < 1) return std::nullopt;
    for (int i = k; i < n - k; ++i)
        if (arr[i] != 1) return std::nullopt;
    Part lam(arr.begin(), arr.begin() + k);
    return OLabel::make(n, lam, 1);
}

OLabel det_twist(const OLabel& x) {
    return OLabel::make(x.rank, x.lam, 1 - x.eps);
}

OLabel det_power_twist(const OLabel& x, int k) {
    return (((k % 2) + 2) % 2 == 1) ? det_twist(x) : x;
}

namespace {

// Multiplies num/den by f_num/f_den keeping the fraction reduced.
struct Frac {
    __int128 num = 1, den = 1;
    void mul(std::int64_t fn, std::int64_t fd) {
        num *= fn;
        den *= fd;
        std::int64_t g = static_cast<std::int64_t>(gcd128(num < 0 ? -num : num,
                                                          den < 0 ? -den : den));
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
    std::int64_t value() const {
        if (den != 1) std::abort();
        return static_cast<std::int64_t>(num);
    }
};

std::int64_t weyl_dim_bd(const Part& lam, int n) {
    // doubled coordinates: L_i = 2 lam_i + n - 2i, R_i = n - 2i, i = 1..k
    int k = n / 2;
    std::vector<std::int64_t> L(k), R(k);
    for (int i = 1; i <= k; ++i) {
        L[i - 1] = 2 * part_at(lam, i - 1) + n - 2 * i;
        R[i - 1] = n - 2 * i;
    }
    Frac f;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            f.mul(L[i] * L[i] - L[j] * L[j], R[i] * R[i] - R[j] * R[j]);
    if (n % 2 == 1)
        for (int i = 0; i < k; ++i) f.mul(L[i], R[i]);
    return f.value();
}

} // namespace

std::int64_t o_dim(const OLabel& x) {
    if (x.rank <= 1) return 1;
    std::int64_t d = weyl_dim_bd(x.lam, x.rank);
    if (x.rank % 2 == 0 && part_depth(x.lam) == x.rank / 2) d *= 2;
    return d;
}

namespace {

void gen_interlacing(const std::vector<int>& upper, int i, std::vector<int>& cur,
                     std::vector<OLabel>& out) {
    int n = static_cast<int>(upper.size()) - 1;
    if (i == n) {
        if (auto lab = parse_full_array(cur)) out.push_back(*lab);
        return;
    }
    int hi = upper[i];
    if (i > 0) hi = std::min(hi, cur[i - 1]);
    int lo = upper[i + 1];
    for (int v = hi; v >= lo; --v) {
        cur.push_back(v);
        gen_interlacing(upper, i + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<OLabel> branch_one_step(const OLabel& x) {
    if (x.rank < 2) fail(ErrKind::InvalidRank, "branching needs rank >= 2");
    std::vector<int> upper = to_full_array(x);
    std::vector<OLabel> out;
    std::vector<int> cur;
    gen_interlacing(upper, 0, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

InfChar infchar_of(const OLabel& x) {
    if (x.rank < 2) fail(ErrKind::InvalidRank, "infchar needs rank >= 2");
    HalfIntVec v =
        HalfIntVec::from_partition(x.lam, x.rank / 2).plus(rho(x.rank));
    return canonical_infchar(v, x.rank);
}

} // namespace ktlift
