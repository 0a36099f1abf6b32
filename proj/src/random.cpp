#include "sft/random.hpp"

#include <algorithm>
#include <map>

#include "sft/error.hpp"

namespace sft::random {

namespace {

template <typename T>
const T& pick(Engine& rng, const std::vector<T>& items) {
  std::uniform_int_distribution<std::size_t> dist(0, items.size() - 1);
  return items[dist(rng)];
}

std::size_t uniform(Engine& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

TransitionMatrix matrix(Engine& rng, std::size_t n) {
  std::bernoulli_distribution bit(0.5);
  while (true) {
    std::vector<std::vector<int>> raw(n, std::vector<int>(n));
    for (auto& row : raw)
      for (auto& x : row) x = bit(rng) ? 1 : 0;
    try {
      return TransitionMatrix::validate(raw);
    } catch (const Error&) {
    }
  }
}

Word word(Engine& rng, const TransitionMatrix& A, std::size_t len) {
  Word w;
  while (w.size() < len) w.push_back(pick(rng, followers_of(A, w)));
  return w;
}

ClopenSet clopen(Engine& rng, const TransitionMatrix& A, std::size_t depth) {
  std::bernoulli_distribution bit(0.5);
  std::vector<Word> chosen;
  for (Word& w : admissible_words(A, depth))
    if (bit(rng)) chosen.push_back(std::move(w));
  return ClopenSet::from_words(A, std::move(chosen));
}

ClopenSet nonempty_clopen(Engine& rng, const TransitionMatrix& A, std::size_t depth) {
  while (true) {
    ClopenSet X = clopen(rng, A, depth);
    if (!X.is_empty()) return X;
  }
}

EPPoint point(Engine& rng, const TransitionMatrix& A, std::size_t max_pre, std::size_t max_per) {
  while (true) {
    Word pre = word(rng, A, uniform(rng, 0, max_pre));
    const std::size_t per_len = uniform(rng, 1, max_per);
    Word per;
    while (per.size() < per_len) {
      const auto& next = per.empty() ? (pre.empty() ? A.symbols() : A.followers(pre.back())) : A.followers(per.back());
      per.push_back(pick(rng, next));
    }
    if (A(per.back(), per.front())) return EPPoint::make(A, std::move(pre), std::move(per));
  }
}

TableMap table(Engine& rng, const TransitionMatrix& A, std::size_t max_depth, std::size_t max_image,
               std::size_t splits) {
  std::vector<TableEntry> entries{TableEntry{Word{}, Word{}}};
  const std::size_t rounds = uniform(rng, 0, splits);
  for (std::size_t round = 0; round < rounds; ++round) {
    // Candidate (domain entry, image entry) pairs of equal class.
    std::vector<std::pair<std::size_t, std::size_t>> options;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].domain.size() >= max_depth) continue;
      for (std::size_t j = 0; j < entries.size(); ++j) {
        if (entries[j].image.size() >= max_image) continue;
        if (follower_class(A, entries[i].domain) == follower_class(A, entries[j].image)) options.emplace_back(i, j);
      }
    }
    if (options.empty()) break;
    auto [i, j] = pick(rng, options);
    const Word d = entries[i].domain;
    const Word img = entries[j].image;
    std::vector<TableEntry> next;
    for (std::size_t k = 0; k < entries.size(); ++k)
      if (k != i && k != j) next.push_back(entries[k]);
    // The partner of d's old image keeps class, so it can take over.
    if (i != j) next.push_back(TableEntry{entries[j].domain, entries[i].image});
    for (Symbol a : followers_of(A, d)) next.push_back(TableEntry{d.appended(a), img.appended(a)});
    entries = std::move(next);
  }

  std::map<int, std::vector<std::size_t>> by_class;
  for (std::size_t k = 0; k < entries.size(); ++k) by_class[follower_class(A, entries[k].domain)].push_back(k);
  for (auto& [cls, members] : by_class) {
    std::vector<Word> images;
    for (std::size_t k : members) images.push_back(entries[k].image);
    std::shuffle(images.begin(), images.end(), rng);
    for (std::size_t t = 0; t < members.size(); ++t) entries[members[t]].image = images[t];
  }
  return TableMap::validate(A, std::move(entries));
}

}  // namespace sft::random
