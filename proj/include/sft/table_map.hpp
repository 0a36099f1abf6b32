#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "sft/clopen.hpp"
#include "sft/matrix.hpp"
#include "sft/word.hpp"

namespace sft {

struct TableEntry {
  Word domain;
  Word image;

  friend bool operator==(const TableEntry& a, const TableEntry& b) {
    return a.domain == b.domain && a.image == b.image;
  }
};

/// An element of the continuous full group given by a prefix-exchange table
/// nu -> Phi(nu): the point nu.z is sent to Phi(nu).z.
///
/// Invariants: the domain words form a partition of X_A into cylinders,
/// so do the image words, and each nu shares its row class with Phi(nu).
/// Domain words may have different lengths; `depth()` is the longest one.
/// A uniform-depth table over B_L(X_A) is the special case the text format
/// was designed around.
class TableMap {
 public:
  /// Checks every invariant and reports the first violation (BadDomain,
  /// InadmissibleWord, RowMismatch, ImagesOverlap, ImagesDontCover).
  static TableMap validate(const TransitionMatrix& A, std::vector<TableEntry> entries);
  static TableMap identity(const TransitionMatrix& A);

  /// For algorithms whose output satisfies the invariants by construction.
  /// Entries are sorted but not checked.
  static TableMap assume_valid(const TransitionMatrix& A, std::vector<TableEntry> entries);

  const TransitionMatrix& matrix() const noexcept { return matrix_; }
  /// Sorted by domain word.
  const std::vector<TableEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t depth() const noexcept;
  bool is_identity() const noexcept;

  /// Entry whose domain is a prefix of w, if any. When none is, U_w is cut
  /// by several domain cylinders.
  const TableEntry* entry_covering(const Word& w) const;

  /// Image word of U_w when U_w lies inside a single domain cylinder.
  std::optional<Word> rewrite(const Word& w) const;

  friend bool operator==(const TableMap& a, const TableMap& b) {
    return a.matrix_ == b.matrix_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const TableMap& a, const TableMap& b) { return !(a == b); }

 private:
  TableMap(TransitionMatrix A, std::vector<TableEntry> entries);

  TransitionMatrix matrix_;
  std::vector<TableEntry> entries_;
};

struct FixedSet {
  ClopenSet clopen_part;
  /// Fixed points inside moved cylinders, sorted and without repeats.
  std::vector<EPPoint> isolated_points;
};

struct SupportAndFixedSet {
  ClopenSet support;
  FixedSet fixed;
};

/// Orbit cocycle constants on U_domain: sigma^k(gamma(x)) = sigma^l(x).
struct Cocycle {
  Word domain;
  std::size_t k = 0;
  std::size_t l = 0;
};

struct PowerOrder {
  std::optional<std::size_t> order;
  /// Iteration stopped because a power outgrew the entry cap.
  bool size_capped = false;
};

EPPoint apply(const TableMap& g, const EPPoint& x);

/// outer o inner, in canonical form.
TableMap compose(const TableMap& outer, const TableMap& inner);
TableMap inverse(const TableMap& g);

/// Unique minimal table for the same homeomorphism: sibling families
/// {pa -> ra} merge into p -> r while p and r share a row class.
TableMap canonical_reduce(const TableMap& g);

/// True iff both tables denote the same homeomorphism.
bool same_element(const TableMap& a, const TableMap& b);

PowerOrder power_order(const TableMap& g, std::size_t max_iter, std::size_t max_entries = 4096);

/// Support P = union of cylinders with Phi(nu) != nu (the closure of the
/// moved set); fixed set = clopen remainder plus finitely many isolated
/// eventually periodic fixed points inside moved cylinders.
SupportAndFixedSet support_and_fixed_set(const TableMap& g);
ClopenSet support(const TableMap& g);

std::vector<Cocycle> cocycles(const TableMap& g);

bool commutes(const TableMap& a, const TableMap& b);

/// gamma fixes the complement of O pointwise, i.e. support(gamma) is inside O.
bool in_local_subgroup(const TableMap& g, const ClopenSet& O);

ClopenSet image_clopen(const TableMap& g, const ClopenSet& X);

/// Factors gamma = gamma1 o gamma2 with gamma1 supported in O and gamma2
/// supported in the complement. Throws NotInvariant unless gamma(O) = O.
std::pair<TableMap, TableMap> split_invariant(const TableMap& g, const ClopenSet& O);

/// Moves each U_from onto U_to for the listed cylinder pairs and fixes the
/// rest. The sources (and the targets) must be pairwise disjoint and cover
/// the same set; throws through `TableMap::validate` otherwise.
TableMap permutation_table(const TransitionMatrix& A, const std::vector<std::pair<Word, Word>>& moves);

/// Involution exchanging the disjoint cylinders U_a and U_b.
TableMap cylinder_swap(const TransitionMatrix& A, const Word& a, const Word& b);

/// The map equal to pieces[i].second on pieces[i].first. The pieces must
/// partition X_A and their images must do so as well.
TableMap piecewise(const TransitionMatrix& A, const std::vector<std::pair<ClopenSet, TableMap>>& pieces);

}  // namespace sft
