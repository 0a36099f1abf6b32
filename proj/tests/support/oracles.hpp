#pragma once

// Brute-force reference implementations used only by tests. None of them
// calls into the library's algorithms beyond plain data access, so they can
// judge its answers independently.

#include <cstdint>
#include <optional>
#include <vector>

#include "sft/matrix.hpp"
#include "sft/table_map.hpp"
#include "sft/word.hpp"

namespace oracle {

using Seq = std::vector<int>;

/// A point as raw (pre, per) without normalization.
struct RawPoint {
  Seq pre;
  Seq per;

  int at(std::size_t i) const { return i < pre.size() ? pre[i] : per[(i - pre.size()) % per.size()]; }
};

/// Equal as infinite sequences: compare max|pre| + lcm|per| symbols.
bool same_point(const RawPoint& a, const RawPoint& b);

RawPoint raw(const sft::EPPoint& p);

/// Number of admissible words of length k from powers of A.
std::uint64_t count_words(const sft::TransitionMatrix& A, std::size_t k);

/// Every eventually periodic point with |pre| <= max_pre and
/// |per| <= max_per in normal form (primitive period, pre either empty or
/// its last symbol differs from the period's last), each exactly once.
std::vector<RawPoint> all_points(const sft::TransitionMatrix& A, std::size_t max_pre, std::size_t max_per);

/// Starts-with check of the point against a word.
bool point_in_cylinder(const RawPoint& x, const Seq& w);
bool point_in_words(const RawPoint& x, const std::vector<sft::Word>& words);

/// Table application by linear scan over entries.
RawPoint apply(const std::vector<sft::TableEntry>& entries, const RawPoint& x);

/// sigma^k.
RawPoint shift(const RawPoint& x, std::size_t k);

/// Determinant by cofactor expansion.
std::int64_t cofactor_det(const std::vector<std::vector<std::int64_t>>& m);

/// Invariant factors (including 1s, 0 for free summands) from gcds of
/// k x k minors.
std::vector<std::int64_t> determinantal_invariant_factors(const std::vector<std::vector<std::int64_t>>& m);

/// Is v in the integer column span of the invertible matrix m (Cramer).
bool in_integer_image(const std::vector<std::vector<std::int64_t>>& m, const std::vector<std::int64_t>& v);

/// Exhaustive pointed-isomorphism test for finite groups
/// Z/d_1 + ... + Z/d_s: enumerate all homomorphisms by generator images,
/// keep bijections, look for one sending a to b. nullopt when the number
/// of candidate homomorphisms exceeds `limit`.
std::optional<bool> pointed_iso_brute(const std::vector<std::int64_t>& d, const std::vector<std::int64_t>& a,
                                      const std::vector<std::int64_t>& b, std::uint64_t limit = 4'000'000);

}  // namespace oracle
