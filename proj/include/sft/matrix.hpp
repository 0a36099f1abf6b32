#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace sft {

/// Alphabet symbols are 1-based: {1, ..., N}.
using Symbol = int;

/// An N x N 0-1 transition matrix that is essential, irreducible and
/// satisfies condition (I). Instances only exist in validated form; copies
/// share the immutable data.
class TransitionMatrix {
 public:
  /// Validates `raw` and reports the first violated property through an
  /// `Error` (Malformed, NotEssential, NotIrreducible, ConditionIFails).
  static TransitionMatrix validate(const std::vector<std::vector<int>>& raw);

  /// All-ones matrix of size n (the full n-shift).
  static TransitionMatrix full_shift(std::size_t n);

  std::size_t size() const noexcept;
  bool operator()(Symbol from, Symbol to) const;

  /// Successors of `s` in increasing order.
  const std::vector<Symbol>& followers(Symbol s) const;
  /// {1, ..., N}, the successors of the empty word.
  const std::vector<Symbol>& symbols() const noexcept;

  /// Two symbols share a class iff their rows coincide. The empty word is
  /// given the class of the all-ones row.
  int follower_class(Symbol s) const;
  int full_class() const noexcept;

  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const TransitionMatrix& a, const TransitionMatrix& b);

 private:
  struct Data;
  explicit TransitionMatrix(std::shared_ptr<const Data> data);

  std::shared_ptr<const Data> data_;
};

}  // namespace sft
