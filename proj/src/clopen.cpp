#include "sft/clopen.hpp"

#include <algorithm>

#include "sft/error.hpp"

namespace sft {

namespace {

// Drops duplicates and words lying inside another word's cylinder.
// Expects sorted input.
std::vector<Word> remove_dominated(std::vector<Word> sorted) {
  std::vector<Word> out;
  out.reserve(sorted.size());
  for (Word& w : sorted) {
    if (!out.empty() && w.starts_with(out.back())) continue;
    out.push_back(std::move(w));
  }
  return out;
}

// Merges complete sibling families bottom-up; input is a sorted antichain.
std::vector<Word> merge_siblings(const TransitionMatrix& A, std::vector<Word> antichain) {
  std::size_t max_len = 0;
  for (const Word& w : antichain) max_len = std::max(max_len, w.size());
  std::vector<std::vector<Word>> by_len(max_len + 1);
  for (Word& w : antichain) by_len[w.size()].push_back(std::move(w));

  for (std::size_t len = max_len; len >= 1; --len) {
    auto& bucket = by_len[len];
    std::sort(bucket.begin(), bucket.end());
    std::vector<Word> kept;
    std::size_t i = 0;
    while (i < bucket.size()) {
      Word parent = bucket[i].prefix(len - 1);
      std::size_t j = i;
      while (j < bucket.size() && bucket[j].starts_with(parent)) ++j;
      if (j - i == followers_of(A, parent).size()) {
        by_len[len - 1].push_back(std::move(parent));
      } else {
        for (std::size_t k = i; k < j; ++k) kept.push_back(std::move(bucket[k]));
      }
      i = j;
    }
    bucket = std::move(kept);
  }

  std::vector<Word> out;
  for (auto& bucket : by_len)
    for (Word& w : bucket) out.push_back(std::move(w));
  std::sort(out.begin(), out.end());
  return out;
}

// Appends the words of `set` lying inside U_w.
void append_inside(const std::vector<Word>& set, const Word& w, std::vector<Word>& out) {
  auto it = std::lower_bound(set.begin(), set.end(), w);
  for (; it != set.end() && it->starts_with(w); ++it) out.push_back(*it);
}

}  // namespace

void require_same_matrix(const TransitionMatrix& a, const TransitionMatrix& b) {
  if (!(a == b)) throw Error(ErrorCode::MatrixMismatch, "operands live over different transition matrices");
}

ClopenSet::ClopenSet(TransitionMatrix A, std::vector<Word> canonical)
    : matrix_(std::move(A)), words_(std::move(canonical)) {}

ClopenSet ClopenSet::from_words(const TransitionMatrix& A, std::vector<Word> words) {
  for (const Word& w : words) {
    if (!is_admissible(A, w)) throw Error(ErrorCode::InadmissibleWord, "word " + w.to_string() + " is not admissible");
  }
  std::sort(words.begin(), words.end());
  return ClopenSet(A, merge_siblings(A, remove_dominated(std::move(words))));
}

ClopenSet ClopenSet::empty(const TransitionMatrix& A) { return ClopenSet(A, {}); }

ClopenSet ClopenSet::full(const TransitionMatrix& A) { return ClopenSet(A, {Word{}}); }

ClopenSet ClopenSet::cylinder(const TransitionMatrix& A, const Word& w) { return from_words(A, {w}); }

std::size_t ClopenSet::depth() const noexcept {
  std::size_t d = 0;
  for (const Word& w : words_) d = std::max(d, w.size());
  return d;
}

CylinderRelation ClopenSet::locate(const Word& w) const {
  // In an antichain, a word that is a prefix of w is the greatest word <= w.
  auto it = std::upper_bound(words_.begin(), words_.end(), w);
  if (it != words_.begin() && w.starts_with(*std::prev(it))) return CylinderRelation::Inside;
  if (it != words_.end() && it->starts_with(w)) return CylinderRelation::Split;
  return CylinderRelation::Outside;
}

bool ClopenSet::contains(const EPPoint& x) const {
  return locate(x.prefix(depth())) == CylinderRelation::Inside;
}

std::vector<Word> ClopenSet::words_at_depth(std::size_t d) const {
  if (d < depth()) throw Error(ErrorCode::BadInput, "uniform depth below canonical depth");
  std::vector<Word> out;
  std::vector<Word> stack(words_.rbegin(), words_.rend());
  while (!stack.empty()) {
    Word w = std::move(stack.back());
    stack.pop_back();
    if (w.size() == d) {
      out.push_back(std::move(w));
      continue;
    }
    const auto& next = followers_of(matrix_, w);
    for (auto it = next.rbegin(); it != next.rend(); ++it) stack.push_back(w.appended(*it));
  }
  return out;
}

ClopenSet unite(const ClopenSet& x, const ClopenSet& y) {
  require_same_matrix(x.matrix(), y.matrix());
  std::vector<Word> words = x.words();
  words.insert(words.end(), y.words().begin(), y.words().end());
  return ClopenSet::from_words(x.matrix(), std::move(words));
}

ClopenSet intersect(const ClopenSet& x, const ClopenSet& y) {
  require_same_matrix(x.matrix(), y.matrix());
  std::vector<Word> words;
  for (const Word& a : x.words()) {
    switch (y.locate(a)) {
      case CylinderRelation::Inside: words.push_back(a); break;
      case CylinderRelation::Split: append_inside(y.words(), a, words); break;
      case CylinderRelation::Outside: break;
    }
  }
  return ClopenSet::from_words(x.matrix(), std::move(words));
}

ClopenSet complement(const ClopenSet& x) {
  const TransitionMatrix& A = x.matrix();
  std::vector<Word> words;
  std::vector<Word> stack{Word{}};
  while (!stack.empty()) {
    Word w = std::move(stack.back());
    stack.pop_back();
    switch (x.locate(w)) {
      case CylinderRelation::Inside: break;
      case CylinderRelation::Outside: words.push_back(std::move(w)); break;
      case CylinderRelation::Split:
        for (Symbol s : followers_of(A, w)) stack.push_back(w.appended(s));
        break;
    }
  }
  return ClopenSet::from_words(A, std::move(words));
}

ClopenSet subtract(const ClopenSet& x, const ClopenSet& y) { return intersect(x, complement(y)); }

ClopenSet boolean_op(BoolOp op, const ClopenSet& x, const ClopenSet& y) {
  switch (op) {
    case BoolOp::Union: return unite(x, y);
    case BoolOp::Intersection: return intersect(x, y);
    case BoolOp::Difference: return subtract(x, y);
    case BoolOp::Complement: return complement(x);
  }
  throw Error(ErrorCode::BadInput, "unknown boolean operation");
}

bool is_subset(const ClopenSet& x, const ClopenSet& y) {
  require_same_matrix(x.matrix(), y.matrix());
  for (const Word& a : x.words()) {
    if (y.locate(a) != CylinderRelation::Inside) return false;
  }
  return true;
}

bool are_disjoint(const ClopenSet& x, const ClopenSet& y) {
  require_same_matrix(x.matrix(), y.matrix());
  for (const Word& a : x.words()) {
    if (y.locate(a) != CylinderRelation::Outside) return false;
  }
  return true;
}

SetRelation clopen_compare(const ClopenSet& x, const ClopenSet& y) {
  require_same_matrix(x.matrix(), y.matrix());
  if (x == y) return SetRelation::Equal;
  if (is_subset(x, y)) return SetRelation::Subset;
  if (is_subset(y, x)) return SetRelation::Superset;
  if (are_disjoint(x, y)) return SetRelation::Disjoint;
  return SetRelation::Overlapping;
}

}  // namespace sft
