#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ktlift/partition.hpp"
#include "ktlift/weights.hpp"

namespace ktlift {

/// An irreducible O(n)-representation: a partition of depth <= floor(n/2)
/// plus a determinant-twist bit. Normal form: when n is even and
/// depth(lam) = n/2 the two twist variants coincide and eps is 0.
struct OLabel {
    int rank = 0;
    Part lam;
    int eps = 0;

    static OLabel make(int rank, Part lam, int eps = 0); // validates + normalizes
    static OLabel trivial(int rank) { return make(rank, {}, 0); }
    static OLabel det(int rank) { return make(rank, {}, 1); }

    bool operator==(const OLabel&) const = default;
    auto operator<=>(const OLabel&) const = default;

    std::string to_string() const; // "[2,1]" or "d*[2,1]"
};

/// Parse "[2,1]" / "d*[2,1]"; rank supplied by context.
OLabel olabel_from_string(const std::string& s, int rank);

/// Full weight array of eq-(3) form, length n.
std::vector<int> to_full_array(const OLabel& x);

/// Inverse of to_full_array. Returns nullopt if the array is not a valid
/// O(n)-weight (neither array form of eq. (3)).
std::optional<OLabel> parse_full_array(const std::vector<int>& arr);

OLabel det_twist(const OLabel& x);
/// det_twist applied k times (k's parity is all that matters).
OLabel det_power_twist(const OLabel& x, int k);

/// Exact dimension: Weyl formula for type B/D, doubled at the
/// depth = n/2 boundary where the label induces from two SO-constituents.
std::int64_t o_dim(const OLabel& x);

/// One-step interlacing branching O(n+1) -> O(n) on full label arrays;
/// multiplicity free.
std::vector<OLabel> branch_one_step(const OLabel& x);

InfChar infchar_of(const OLabel& x);

} // namespace ktlift
