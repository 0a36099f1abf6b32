#pragma once

#include <cstddef>
#include <vector>

#include "sft/matrix.hpp"
#include "sft/word.hpp"

namespace sft {

enum class CylinderRelation { Inside, Outside, Split };
enum class SetRelation { Equal, Subset, Superset, Disjoint, Overlapping };
enum class BoolOp { Union, Intersection, Difference, Complement };

/// A clopen subset of X_A as the unique minimal finite family of pairwise
/// disjoint cylinders: no word is a prefix of another and no complete
/// sibling family {pa : A(last p, a) = 1} occurs. Equality of sets is
/// therefore equality of word lists.
///
/// The empty set has no words; X_A itself is the single empty word.
class ClopenSet {
 public:
  /// Canonicalizes an arbitrary list of admissible words (overlaps allowed).
  /// Throws InadmissibleWord.
  static ClopenSet from_words(const TransitionMatrix& A, std::vector<Word> words);
  static ClopenSet empty(const TransitionMatrix& A);
  static ClopenSet full(const TransitionMatrix& A);
  static ClopenSet cylinder(const TransitionMatrix& A, const Word& w);

  const TransitionMatrix& matrix() const noexcept { return matrix_; }
  /// Canonical cylinders in lexicographic order.
  const std::vector<Word>& words() const noexcept { return words_; }
  bool is_empty() const noexcept { return words_.empty(); }
  bool is_full() const noexcept { return words_.size() == 1 && words_.front().empty(); }
  /// Length of the longest canonical word.
  std::size_t depth() const noexcept;

  /// Position of U_w relative to this set.
  CylinderRelation locate(const Word& w) const;
  bool contains(const EPPoint& x) const;

  /// The set as a union of cylinders of uniform length d >= depth().
  std::vector<Word> words_at_depth(std::size_t d) const;

  friend bool operator==(const ClopenSet& a, const ClopenSet& b) {
    return a.matrix_ == b.matrix_ && a.words_ == b.words_;
  }
  friend bool operator!=(const ClopenSet& a, const ClopenSet& b) { return !(a == b); }

 private:
  ClopenSet(TransitionMatrix A, std::vector<Word> canonical);

  TransitionMatrix matrix_;
  std::vector<Word> words_;
};

inline ClopenSet canonicalize_clopen(const TransitionMatrix& A, std::vector<Word> words) {
  return ClopenSet::from_words(A, std::move(words));
}

ClopenSet unite(const ClopenSet& x, const ClopenSet& y);
ClopenSet intersect(const ClopenSet& x, const ClopenSet& y);
ClopenSet subtract(const ClopenSet& x, const ClopenSet& y);
ClopenSet complement(const ClopenSet& x);

/// Complement ignores `y`. Throws MatrixMismatch.
ClopenSet boolean_op(BoolOp op, const ClopenSet& x, const ClopenSet& y);

/// Equal, then Subset, then Superset, then Disjoint, else Overlapping (so the
/// empty set is reported as a subset of everything).
SetRelation clopen_compare(const ClopenSet& x, const ClopenSet& y);

bool is_subset(const ClopenSet& x, const ClopenSet& y);
bool are_disjoint(const ClopenSet& x, const ClopenSet& y);

/// Throws MatrixMismatch unless both objects live over the same matrix.
void require_same_matrix(const TransitionMatrix& a, const TransitionMatrix& b);

}  // namespace sft
