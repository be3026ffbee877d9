#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ktlift/olabel.hpp"

namespace ktlift {

/// A tuple of O-labels, one per K-factor.
struct KTuple {
    std::vector<OLabel> labels;

    int total_size() const;
    bool operator==(const KTuple&) const = default;
    auto operator<=>(const KTuple&) const = default;
    std::string to_string() const; // "[2]⊠d*[1]"
};

/// Finite formal N-linear combination of K-tuples. The optional cutoff is
/// truncation metadata recorded by the producing operation (its meaning —
/// |l|-cutoff or total-size cutoff — belongs to that operation).
struct KTypeSum {
    std::map<KTuple, std::int64_t> terms;
    std::optional<int> cutoff;

    void add(KTuple t, std::int64_t mult);
    void add_scaled(const KTypeSum& other, std::int64_t mult);
    std::int64_t mult_of(const KTuple& t) const;
    bool empty() const { return terms.empty(); }

    /// Sum over terms of multiplicity times the product of constituent
    /// dimensions — the master dimension oracle.
    std::int64_t total_dim() const;

    /// det-twists slot i of every term.
    KTypeSum twist_slot(int slot) const;

    /// Tensor along tuples: pairs each term of a with each term of b by
    /// concatenating tuples.
    static KTypeSum outer(const KTypeSum& a, const KTypeSum& b);

    bool operator==(const KTypeSum& o) const { return terms == o.terms; }
    std::string to_string() const;
};

/// Multiset containment a <= b.
bool contained_in(const KTypeSum& a, const KTypeSum& b);

/// Human-readable diff lines for mismatching sums (empty if equal).
std::vector<std::string> diff_sums(const KTypeSum& a, const KTypeSum& b);

} // namespace ktlift
