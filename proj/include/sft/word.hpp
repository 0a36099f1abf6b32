#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "sft/matrix.hpp"

namespace sft {

/// A finite word over {1, ..., N}. Admissibility is a property checked
/// against a matrix, not an invariant of the type.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol front() const { return symbols_.front(); }
  Symbol back() const { return symbols_.back(); }
  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

  Word prefix(std::size_t n) const;
  Word drop(std::size_t n) const;
  Word appended(Symbol s) const;
  void push_back(Symbol s) { symbols_.push_back(s); }
  void pop_back() { symbols_.pop_back(); }

  /// True iff `p` is a (not necessarily proper) prefix of this word.
  bool starts_with(const Word& p) const noexcept;

  /// "1,2,1"; the empty word prints as "".
  std::string to_string() const;

  friend Word operator+(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) noexcept { return a.symbols_ == b.symbols_; }
  friend bool operator!=(const Word& a, const Word& b) noexcept { return a.symbols_ != b.symbols_; }
  friend bool operator<(const Word& a, const Word& b) noexcept { return a.symbols_ < b.symbols_; }

 private:
  std::vector<Symbol> symbols_;
};

/// Cylinders U_a and U_b intersect iff one word is a prefix of the other.
inline bool comparable(const Word& a, const Word& b) noexcept {
  return a.size() <= b.size() ? b.starts_with(a) : a.starts_with(b);
}

bool is_admissible(const TransitionMatrix& A, const Word& w);

/// Symbols that may follow `w`; for the empty word, every symbol.
const std::vector<Symbol>& followers_of(const TransitionMatrix& A, const Word& w);

/// Class of the row of the last symbol (the all-ones class for the empty word).
/// Two words may exchange suffixes iff their classes agree.
int follower_class(const TransitionMatrix& A, const Word& w);

/// B_k(X_A) in lexicographic order; k = 0 gives the single empty word.
std::vector<Word> admissible_words(const TransitionMatrix& A, std::size_t k);

/// Shortest word xi with A(u, xi_1) = A(xi_l, v) = 1 (empty when A(u, v) = 1),
/// lexicographically least among the shortest.
Word connect_path(const TransitionMatrix& A, Symbol u, Symbol v);

struct PathPair {
  Word first;
  Word second;
  Symbol join = 0;
};

/// Distinct equal-length words s, s' that may both follow `from` and both be
/// followed by the same symbol u. Searches lengths 1 .. N^2 + N and returns
/// the least (length, u, s, s') found.
PathPair distinct_path_pair(const TransitionMatrix& A, Symbol from);

/// An eventually periodic point preperiod . period . period . ... stored in
/// normal form: primitive period and shortest preperiod. Equality of values
/// is equality of points.
class EPPoint {
 public:
  /// Validates admissibility of the infinite sequence and normalizes.
  static EPPoint make(const TransitionMatrix& A, Word preperiod, Word period);

  const Word& preperiod() const noexcept { return pre_; }
  const Word& period() const noexcept { return per_; }

  /// 0-based symbol access into the infinite sequence.
  Symbol at(std::size_t i) const;
  Word prefix(std::size_t n) const;

  /// sigma^k(x).
  EPPoint shifted(std::size_t k) const;
  /// w . x; the caller guarantees admissibility.
  EPPoint prepended(const Word& w) const;

  /// "pre|per" with comma-separated symbols.
  std::string to_string() const;

  friend bool operator==(const EPPoint& a, const EPPoint& b) noexcept {
    return a.pre_ == b.pre_ && a.per_ == b.per_;
  }
  friend bool operator!=(const EPPoint& a, const EPPoint& b) noexcept { return !(a == b); }
  friend bool operator<(const EPPoint& a, const EPPoint& b) noexcept {
    return a.pre_ < b.pre_ || (a.pre_ == b.pre_ && a.per_ < b.per_);
  }

 private:
  EPPoint(Word pre, Word per);
  void normalize();

  Word pre_;
  Word per_;
};

/// The point w . c1 c2 ... obtained by always appending the least follower.
EPPoint least_continuation(const TransitionMatrix& A, const Word& w);

}  // namespace sft
