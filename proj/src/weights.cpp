#include "ktlift/weights.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ktlift/errors.hpp"

namespace ktlift {

HalfIntVec HalfIntVec::from_ints(const std::vector<int>& v) {
    HalfIntVec h;
    h.twice.reserve(v.size());
    for (int x : v) h.twice.push_back(2 * x);
    return h;
}

HalfIntVec HalfIntVec::from_partition(const Part& p, int pad_to) {
    if (part_depth(p) > pad_to)
        fail(ErrKind::InvalidParams, "partition deeper than padded length");
    HalfIntVec h;
    h.twice.reserve(pad_to);
    for (int i = 0; i < pad_to; ++i) h.twice.push_back(2 * part_at(p, i));
    return h;
}

bool HalfIntVec::uniform_integral() const {
    bool saw_int = false, saw_half = false;
    for (int t : twice) {
        if (t % 2 == 0)
            saw_int = true;
        else
            saw_half = true;
    }
    if (saw_int && saw_half)
        fail(ErrKind::MixedParity, "mixed integer/half-integer entries");
    return !saw_half; // empty vector counts as integral
}

HalfIntVec HalfIntVec::concat(const HalfIntVec& other) const {
    HalfIntVec h = *this;
    h.twice.insert(h.twice.end(), other.twice.begin(), other.twice.end());
    return h;
}

HalfIntVec HalfIntVec::plus(const HalfIntVec& other) const {
    if (twice.size() != other.twice.size())
        fail(ErrKind::InvalidRank, "length mismatch in vector sum");
    HalfIntVec h = *this;
    for (std::size_t i = 0; i < h.twice.size(); ++i) h.twice[i] += other.twice[i];
    return h;
}

HalfIntVec HalfIntVec::shifted(int twice_delta) const {
    HalfIntVec h = *this;
    for (int& t : h.twice) t += twice_delta;
    return h;
}

std::string HalfIntVec::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < twice.size(); ++i) {
        if (i) os << ", ";
        if (twice[i] % 2 == 0)
            os << twice[i] / 2;
        else
            os << twice[i] << "/2";
    }
    os << ')';
    return os.str();
}

std::string InfChar::to_string() const {
    std::ostringstream os;
    os << (algebra_type == AlgType::B ? "B" : "D") << algebra_rank << ":"
       << entries.to_string();
    return os.str();
}

HalfIntVec rho(int N) {
    if (N < 2) fail(ErrKind::InvalidRank, "rho needs N >= 2");
    int k = N / 2;
    HalfIntVec h;
    h.twice.reserve(k);
    for (int i = 1; i <= k; ++i) h.twice.push_back(N - 2 * i); // 2*(N/2 - i)
    return h;
}

InfChar canonical_infchar(const HalfIntVec& v, int N) {
    if (N < 2) fail(ErrKind::InvalidRank, "infchar needs N >= 2");
    if (v.length() != N / 2)
        fail(ErrKind::InvalidRank, "infchar entry count must be floor(N/2)");
    v.uniform_integral(); // throws on mixed parity
    InfChar c;
    c.algebra_rank = N / 2;
    c.algebra_type = (N % 2 == 1) ? AlgType::B : AlgType::D;
    c.entries = v;
    for (int& t : c.entries.twice) t = std::abs(t);
    std::sort(c.entries.twice.begin(), c.entries.twice.end(),
              std::greater<int>());
    return c;
}

bool is_regular(const InfChar& c) {
    const auto& e = c.entries.twice;
    for (std::size_t i = 0; i + 1 < e.size(); ++i)
        if (e[i] == e[i + 1]) return false;
    if (c.algebra_type == AlgType::B && !e.empty() && e.back() == 0)
        return false;
    return true;
}

} // namespace ktlift
