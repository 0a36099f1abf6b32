#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "sft/matrix.hpp"
#include "sft/table_map.hpp"

namespace sft {

struct SearchBounds {
  std::size_t depth = 1;         // longest domain word
  std::size_t image_length = 1;  // longest image word
  std::size_t budget = 2'000'000;  // predicate evaluations and generated codes
};

struct SearchResult {
  std::optional<TableMap> witness;
  std::size_t examined = 0;
  /// The enumeration stopped at the budget, so "no witness" is not a proof
  /// of absence within the bounds.
  bool budget_exhausted = false;
};

/// Enumerates every valid table with domain words of length <= depth and
/// image words of length <= image_length and returns the first one that
/// satisfies `predicate`.
///
/// Order: by number of entries, then domain code, then image code (both
/// as sorted word lists, lexicographically), then the class-respecting
/// bijection in lexicographic order of image indices. Distinct tables may
/// denote the same element; the first hit is returned as enumerated.
SearchResult witness_search(const TransitionMatrix& A, const std::function<bool(const TableMap&)>& predicate,
                            const SearchBounds& bounds);

}  // namespace sft
