#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ktlift {

/// A partition is a weakly decreasing vector of positive integers.
/// The empty vector is the empty partition.
using Part = std::vector<int>;

bool is_partition(const Part& p);
int part_size(const Part& p);
inline int part_depth(const Part& p) { return static_cast<int>(p.size()); }
int part_at(const Part& p, int i); // 0-based, 0 beyond the depth
Part conjugate(const Part& p);
bool contains(const Part& outer, const Part& inner);
bool all_rows_even(const Part& p);

std::string part_to_string(const Part& p);       // "[2,1]"
Part part_from_string(const std::string& s);     // inverse

/// All partitions of n with depth <= max_depth and parts <= max_part.
std::vector<Part> partitions_of(int n, int max_depth, int max_part = -1);
/// All partitions of size <= max_size with depth <= max_depth.
std::vector<Part> partitions_up_to(int max_size, int max_depth);

/// Littlewood-Richardson coefficient c^lam_{mu nu}, by enumeration of LR
/// skew tableaux of shape lam/mu and content nu. Memoized; see cache.hpp
/// for the persistent store behind the memo.
std::int64_t lr_coeff(const Part& lam, const Part& mu, const Part& nu);

/// Dimension of the GL(k) irreducible with highest weight mu (hook content
/// formula). Exact; requires depth(mu) <= k.
std::int64_t gl_dim(const Part& mu, int k);

std::int64_t binomial(std::int64_t n, std::int64_t k);

} // namespace ktlift
