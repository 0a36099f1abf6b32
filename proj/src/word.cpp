#include "sft/word.hpp"

#include <algorithm>
#include <limits>

#include "sft/error.hpp"

namespace sft {

Word Word::prefix(std::size_t n) const {
  return Word(std::vector<Symbol>(symbols_.begin(), symbols_.begin() + std::min(n, symbols_.size())));
}

Word Word::drop(std::size_t n) const {
  return Word(std::vector<Symbol>(symbols_.begin() + std::min(n, symbols_.size()), symbols_.end()));
}

Word Word::appended(Symbol s) const {
  Word out = *this;
  out.symbols_.push_back(s);
  return out;
}

bool Word::starts_with(const Word& p) const noexcept {
  return p.size() <= size() && std::equal(p.symbols_.begin(), p.symbols_.end(), symbols_.begin());
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(symbols_[i]);
  }
  return out;
}

Word operator+(const Word& a, const Word& b) {
  Word out = a;
  out.symbols_.insert(out.symbols_.end(), b.symbols_.begin(), b.symbols_.end());
  return out;
}

bool is_admissible(const TransitionMatrix& A, const Word& w) {
  const auto n = static_cast<Symbol>(A.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 1 || w[i] > n) return false;
    if (i > 0 && !A(w[i - 1], w[i])) return false;
  }
  return true;
}

const std::vector<Symbol>& followers_of(const TransitionMatrix& A, const Word& w) {
  return w.empty() ? A.symbols() : A.followers(w.back());
}

int follower_class(const TransitionMatrix& A, const Word& w) {
  return w.empty() ? A.full_class() : A.follower_class(w.back());
}

std::vector<Word> admissible_words(const TransitionMatrix& A, std::size_t k) {
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 0; len < k; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (Symbol s : followers_of(A, w)) next.push_back(w.appended(s));
    }
    layer = std::move(next);
  }
  return layer;
}

Word connect_path(const TransitionMatrix& A, Symbol u, Symbol v) {
  const std::size_t n = A.size();
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  // dist[s]: length of the shortest xi with s xi v admissible.
  std::vector<std::size_t> dist(n + 1, kInf);
  for (Symbol s : A.symbols()) {
    if (A(s, v)) dist[s] = 0;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (Symbol s : A.symbols()) {
      for (Symbol t : A.followers(s)) {
        if (dist[t] != kInf && dist[t] + 1 < dist[s]) {
          dist[s] = dist[t] + 1;
          changed = true;
        }
      }
    }
  }
  if (dist[u] == kInf) throw Error(ErrorCode::Internal, "no path; matrix is not irreducible");
  Word xi;
  Symbol cur = u;
  while (dist[cur] > 0) {
    for (Symbol t : A.followers(cur)) {
      if (dist[t] + 1 == dist[cur]) {
        xi.push_back(t);
        cur = t;
        break;
      }
    }
  }
  return xi;
}

namespace {

// First two words of length `len` (lexicographic order) that may follow
// `from` and be followed by `join`. `viable[r][s]`: some walk of r further
// symbols after s ends in a predecessor of `join`.
void collect_pair(const TransitionMatrix& A, Symbol from, Symbol join, std::size_t len,
                  std::vector<Word>& found) {
  const std::size_t n = A.size();
  std::vector<std::vector<bool>> viable(len, std::vector<bool>(n + 1, false));
  for (Symbol s : A.symbols()) viable[0][s] = A(s, join);
  for (std::size_t r = 1; r < len; ++r) {
    for (Symbol s : A.symbols()) {
      for (Symbol t : A.followers(s)) {
        if (viable[r - 1][t]) {
          viable[r][s] = true;
          break;
        }
      }
    }
  }
  Word cur;
  auto dfs = [&](auto&& self, Symbol last) -> void {
    if (found.size() >= 2) return;
    if (cur.size() == len) {
      found.push_back(cur);
      return;
    }
    std::size_t remaining = len - cur.size() - 1;
    for (Symbol t : A.followers(last)) {
      if (!viable[remaining][t]) continue;
      cur.push_back(t);
      self(self, t);
      cur.pop_back();
      if (found.size() >= 2) return;
    }
  };
  dfs(dfs, from);
}

}  // namespace

PathPair distinct_path_pair(const TransitionMatrix& A, Symbol from) {
  const std::size_t n = A.size();
  const std::size_t bound = n * n + n;
  for (std::size_t len = 1; len <= bound; ++len) {
    for (Symbol u : A.symbols()) {
      std::vector<Word> found;
      collect_pair(A, from, u, len, found);
      if (found.size() == 2) return PathPair{found[0], found[1], u};
    }
  }
  throw Error(ErrorCode::Internal, "no distinct path pair within length bound; condition (I) fails");
}

EPPoint::EPPoint(Word pre, Word per) : pre_(std::move(pre)), per_(std::move(per)) { normalize(); }

EPPoint EPPoint::make(const TransitionMatrix& A, Word preperiod, Word period) {
  if (period.empty()) throw Error(ErrorCode::Malformed, "eventually periodic point needs a nonempty period");
  if (!is_admissible(A, preperiod) || !is_admissible(A, period) ||
      (!preperiod.empty() && !A(preperiod.back(), period.front())) || !A(period.back(), period.front())) {
    throw Error(ErrorCode::InadmissibleWord,
                "point " + preperiod.to_string() + "|" + period.to_string() + " is not admissible");
  }
  return EPPoint(std::move(preperiod), std::move(period));
}

void EPPoint::normalize() {
  const std::size_t p = per_.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d) continue;
    bool repeats = true;
    for (std::size_t i = d; i < p && repeats; ++i) repeats = per_[i] == per_[i - d];
    if (repeats) {
      per_ = per_.prefix(d);
      break;
    }
  }
  if (pre_.empty() || pre_.back() != per_.back()) return;
  std::vector<Symbol> pre = pre_.symbols();
  std::vector<Symbol> per = per_.symbols();
  while (!pre.empty() && pre.back() == per.back()) {
    pre.pop_back();
    std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
  }
  pre_ = Word(std::move(pre));
  per_ = Word(std::move(per));
}

Symbol EPPoint::at(std::size_t i) const {
  return i < pre_.size() ? pre_[i] : per_[(i - pre_.size()) % per_.size()];
}

Word EPPoint::prefix(std::size_t n) const {
  std::vector<Symbol> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = at(i);
  return Word(std::move(out));
}

EPPoint EPPoint::shifted(std::size_t k) const {
  if (k <= pre_.size()) return EPPoint(pre_.drop(k), per_);
  std::size_t r = (k - pre_.size()) % per_.size();
  std::vector<Symbol> per = per_.symbols();
  std::rotate(per.begin(), per.begin() + static_cast<std::ptrdiff_t>(r), per.end());
  return EPPoint(Word{}, Word(std::move(per)));
}

EPPoint EPPoint::prepended(const Word& w) const { return EPPoint(w + pre_, per_); }

std::string EPPoint::to_string() const { return pre_.to_string() + "|" + per_.to_string(); }

EPPoint least_continuation(const TransitionMatrix& A, const Word& w) {
  Word pre = w;
  std::vector<int> seen_at(A.size() + 1, -1);
  std::vector<Symbol> tail;
  Symbol next = followers_of(A, w).front();
  while (seen_at[next] < 0) {
    seen_at[next] = static_cast<int>(tail.size());
    tail.push_back(next);
    next = A.followers(next).front();
  }
  for (int i = 0; i < seen_at[next]; ++i) pre.push_back(tail[i]);
  Word per(std::vector<Symbol>(tail.begin() + seen_at[next], tail.end()));
  return EPPoint::make(A, std::move(pre), std::move(per));
}

}  // namespace sft
