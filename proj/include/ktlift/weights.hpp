#pragma once

#include <string>
#include <vector>

#include "ktlift/partition.hpp"

namespace ktlift {

/// Vector of half-integers, stored as doubled integers. Entry i has value
/// twice[i] / 2; no floating point anywhere.
struct HalfIntVec {
    std::vector<int> twice;

    static HalfIntVec from_ints(const std::vector<int>& v);
    static HalfIntVec from_partition(const Part& p, int pad_to);

    int length() const { return static_cast<int>(twice.size()); }
    bool operator==(const HalfIntVec&) const = default;
    auto operator<=>(const HalfIntVec&) const = default;

    /// true if every entry is an integer, false if every entry is a strict
    /// half-integer; throws MixedParity otherwise.
    bool uniform_integral() const;

    HalfIntVec concat(const HalfIntVec& other) const;
    HalfIntVec plus(const HalfIntVec& other) const; // entrywise, same length
    HalfIntVec shifted(int twice_delta) const;      // add twice_delta/2 to all

    std::string to_string() const; // "(3/2, 1/2)"
};

enum class AlgType { B, D };

/// Canonical signed-permutation-orbit representative of an infinitesimal
/// character of so(N): entries are absolute values, sorted descending.
/// Orbit equality under the full O-Weyl group is entrywise equality of
/// canonical forms; regularity is tested against W(D) for even N and
/// W(B) for odd N.
struct InfChar {
    int algebra_rank = 0;
    AlgType algebra_type = AlgType::D;
    HalfIntVec entries;

    bool operator==(const InfChar&) const = default;
    std::string to_string() const;
};

/// Half sum of positive roots of so(N), length floor(N/2):
/// (N/2-1, N/2-2, ...). Entries are half-integers iff N is odd.
HalfIntVec rho(int N);

InfChar canonical_infchar(const HalfIntVec& v, int N);

/// Type B: regular iff entries pairwise distinct and nonzero.
/// Type D: regular iff entries pairwise distinct (one zero is allowed).
bool is_regular(const InfChar& c);

} // namespace ktlift
