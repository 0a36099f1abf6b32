#include "sft/table_map.hpp"

#include <algorithm>

#include "sft/error.hpp"

namespace sft {

namespace {

bool domain_less(const TableEntry& a, const TableEntry& b) { return a.domain < b.domain; }

std::string entry_text(const TableEntry& e) { return e.domain.to_string() + " -> " + e.image.to_string(); }

}  // namespace

TableMap::TableMap(TransitionMatrix A, std::vector<TableEntry> entries)
    : matrix_(std::move(A)), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), domain_less);
}

TableMap TableMap::assume_valid(const TransitionMatrix& A, std::vector<TableEntry> entries) {
  return TableMap(A, std::move(entries));
}

TableMap TableMap::identity(const TransitionMatrix& A) { return TableMap(A, {TableEntry{Word{}, Word{}}}); }

TableMap TableMap::validate(const TransitionMatrix& A, std::vector<TableEntry> entries) {
  if (entries.empty()) throw Error(ErrorCode::BadDomain, "table has no entries");
  for (const TableEntry& e : entries) {
    if (!is_admissible(A, e.domain))
      throw Error(ErrorCode::BadDomain, "domain word " + e.domain.to_string() + " is not admissible");
    if (!is_admissible(A, e.image))
      throw Error(ErrorCode::InadmissibleWord, "image word " + e.image.to_string() + " is not admissible");
  }
  std::sort(entries.begin(), entries.end(), domain_less);
  std::vector<Word> domains;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0 && entries[i].domain.starts_with(entries[i - 1].domain)) {
      throw Error(ErrorCode::BadDomain, "domain cylinders " + entries[i - 1].domain.to_string() + " and " +
                                            entries[i].domain.to_string() + " overlap");
    }
    domains.push_back(entries[i].domain);
  }
  if (!ClopenSet::from_words(A, std::move(domains)).is_full())
    throw Error(ErrorCode::BadDomain, "domain cylinders do not cover X_A");

  for (const TableEntry& e : entries) {
    if (follower_class(A, e.domain) != follower_class(A, e.image))
      throw Error(ErrorCode::RowMismatch, "row of last symbol differs in entry " + entry_text(e));
  }

  std::vector<Word> images;
  for (const TableEntry& e : entries) images.push_back(e.image);
  std::sort(images.begin(), images.end());
  for (std::size_t i = 1; i < images.size(); ++i) {
    if (images[i].starts_with(images[i - 1])) {
      throw Error(ErrorCode::ImagesOverlap,
                  "image cylinders " + images[i - 1].to_string() + " and " + images[i].to_string() + " overlap");
    }
  }
  if (!ClopenSet::from_words(A, std::move(images)).is_full())
    throw Error(ErrorCode::ImagesDontCover, "image cylinders do not cover X_A");
  return TableMap(A, std::move(entries));
}

std::size_t TableMap::depth() const noexcept {
  std::size_t d = 0;
  for (const TableEntry& e : entries_) d = std::max(d, e.domain.size());
  return d;
}

bool TableMap::is_identity() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const TableEntry& e) { return e.domain == e.image; });
}

const TableEntry* TableMap::entry_covering(const Word& w) const {
  auto it = std::upper_bound(entries_.begin(), entries_.end(), w,
                             [](const Word& key, const TableEntry& e) { return key < e.domain; });
  if (it == entries_.begin()) return nullptr;
  --it;
  return w.starts_with(it->domain) ? &*it : nullptr;
}

std::optional<Word> TableMap::rewrite(const Word& w) const {
  const TableEntry* e = entry_covering(w);
  if (!e) return std::nullopt;
  return e->image + w.drop(e->domain.size());
}

EPPoint apply(const TableMap& g, const EPPoint& x) {
  const TableEntry* e = g.entry_covering(x.prefix(g.depth()));
  if (!e) throw Error(ErrorCode::Internal, "table does not cover point " + x.to_string());
  return x.shifted(e->domain.size()).prepended(e->image);
}

TableMap compose(const TableMap& outer, const TableMap& inner) {
  require_same_matrix(outer.matrix(), inner.matrix());
  const TransitionMatrix& A = inner.matrix();
  std::vector<TableEntry> out;
  std::vector<TableEntry> stack(inner.entries().rbegin(), inner.entries().rend());
  while (!stack.empty()) {
    TableEntry e = std::move(stack.back());
    stack.pop_back();
    if (auto img = outer.rewrite(e.image)) {
      out.push_back(TableEntry{std::move(e.domain), std::move(*img)});
      continue;
    }
    // U_image is cut by the outer table: refine both sides by one symbol.
    const auto& next = followers_of(A, e.image);
    for (auto it = next.rbegin(); it != next.rend(); ++it)
      stack.push_back(TableEntry{e.domain.appended(*it), e.image.appended(*it)});
  }
  return canonical_reduce(TableMap::assume_valid(A, std::move(out)));
}

TableMap inverse(const TableMap& g) {
  std::vector<TableEntry> out;
  out.reserve(g.size());
  for (const TableEntry& e : g.entries()) out.push_back(TableEntry{e.image, e.domain});
  return TableMap::assume_valid(g.matrix(), std::move(out));
}

TableMap canonical_reduce(const TableMap& g) {
  const TransitionMatrix& A = g.matrix();
  const std::size_t max_len = g.depth();
  std::vector<std::vector<TableEntry>> by_len(max_len + 1);
  for (const TableEntry& e : g.entries()) by_len[e.domain.size()].push_back(e);

  for (std::size_t len = max_len; len >= 1; --len) {
    auto& bucket = by_len[len];
    std::sort(bucket.begin(), bucket.end(), domain_less);
    std::vector<TableEntry> kept;
    std::size_t i = 0;
    while (i < bucket.size()) {
      Word parent = bucket[i].domain.prefix(len - 1);
      std::size_t j = i;
      while (j < bucket.size() && bucket[j].domain.starts_with(parent)) ++j;

      bool mergeable = j - i == followers_of(A, parent).size();
      Word root;
      if (mergeable) {
        const Word& first = bucket[i].image;
        mergeable = !first.empty() && first.back() == bucket[i].domain.back();
        if (mergeable) root = first.prefix(first.size() - 1);
        for (std::size_t k = i + 1; k < j && mergeable; ++k) {
          const Word& img = bucket[k].image;
          mergeable = img.size() == first.size() && img.back() == bucket[k].domain.back() && img.starts_with(root);
        }
        mergeable = mergeable && follower_class(A, parent) == follower_class(A, root);
      }
      if (mergeable) {
        by_len[len - 1].push_back(TableEntry{std::move(parent), std::move(root)});
      } else {
        for (std::size_t k = i; k < j; ++k) kept.push_back(std::move(bucket[k]));
      }
      i = j;
    }
    bucket = std::move(kept);
  }

  std::vector<TableEntry> out;
  for (auto& bucket : by_len)
    for (TableEntry& e : bucket) out.push_back(std::move(e));
  return TableMap::assume_valid(A, std::move(out));
}

bool same_element(const TableMap& a, const TableMap& b) {
  require_same_matrix(a.matrix(), b.matrix());
  return canonical_reduce(a) == canonical_reduce(b);
}

PowerOrder power_order(const TableMap& g, std::size_t max_iter, std::size_t max_entries) {
  if (max_iter == 0) throw Error(ErrorCode::BadInput, "iteration bound must be at least 1");
  TableMap current = canonical_reduce(g);
  for (std::size_t k = 1; k <= max_iter; ++k) {
    if (current.is_identity()) return PowerOrder{k, false};
    if (k == max_iter) break;
    current = compose(g, current);
    if (current.size() > max_entries) return PowerOrder{std::nullopt, true};
  }
  return PowerOrder{std::nullopt, false};
}

SupportAndFixedSet support_and_fixed_set(const TableMap& g) {
  const TransitionMatrix& A = g.matrix();
  std::vector<Word> moved;
  std::vector<Word> fixed;
  std::vector<EPPoint> points;
  for (const TableEntry& e : g.entries()) {
    if (e.domain == e.image) {
      fixed.push_back(e.domain);
      continue;
    }
    moved.push_back(e.domain);
    // nu.z = Phi(nu).z forces z = w z for the surplus w, i.e. z = w^infinity.
    if (e.image.size() > e.domain.size() && e.image.starts_with(e.domain)) {
      Word w = e.image.drop(e.domain.size());
      if (A(w.back(), w.front())) points.push_back(EPPoint::make(A, e.domain, w));
    } else if (e.domain.size() > e.image.size() && e.domain.starts_with(e.image)) {
      Word u = e.domain.drop(e.image.size());
      if (A(u.back(), u.front())) points.push_back(EPPoint::make(A, e.domain, u));
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return SupportAndFixedSet{ClopenSet::from_words(A, std::move(moved)),
                            FixedSet{ClopenSet::from_words(A, std::move(fixed)), std::move(points)}};
}

ClopenSet support(const TableMap& g) {
  std::vector<Word> moved;
  for (const TableEntry& e : g.entries())
    if (e.domain != e.image) moved.push_back(e.domain);
  return ClopenSet::from_words(g.matrix(), std::move(moved));
}

std::vector<Cocycle> cocycles(const TableMap& g) {
  std::vector<Cocycle> out;
  out.reserve(g.size());
  for (const TableEntry& e : g.entries()) out.push_back(Cocycle{e.domain, e.image.size(), e.domain.size()});
  return out;
}

bool commutes(const TableMap& a, const TableMap& b) { return compose(a, b) == compose(b, a); }

bool in_local_subgroup(const TableMap& g, const ClopenSet& O) {
  require_same_matrix(g.matrix(), O.matrix());
  return is_subset(support(g), O);
}

ClopenSet image_clopen(const TableMap& g, const ClopenSet& X) {
  require_same_matrix(g.matrix(), X.matrix());
  const TransitionMatrix& A = g.matrix();
  std::vector<Word> out;
  std::vector<Word> stack(X.words().begin(), X.words().end());
  while (!stack.empty()) {
    Word w = std::move(stack.back());
    stack.pop_back();
    if (auto img = g.rewrite(w)) {
      out.push_back(std::move(*img));
      continue;
    }
    for (Symbol s : followers_of(A, w)) stack.push_back(w.appended(s));
  }
  return ClopenSet::from_words(A, std::move(out));
}

std::pair<TableMap, TableMap> split_invariant(const TableMap& g, const ClopenSet& O) {
  require_same_matrix(g.matrix(), O.matrix());
  if (image_clopen(g, O) != O) throw Error(ErrorCode::NotInvariant, "gamma(O) differs from O");
  const TransitionMatrix& A = g.matrix();
  std::vector<TableEntry> inside;
  std::vector<TableEntry> outside;
  std::vector<TableEntry> stack(g.entries().begin(), g.entries().end());
  while (!stack.empty()) {
    TableEntry e = std::move(stack.back());
    stack.pop_back();
    switch (O.locate(e.domain)) {
      case CylinderRelation::Inside:
        inside.push_back(e);
        outside.push_back(TableEntry{e.domain, e.domain});
        break;
      case CylinderRelation::Outside:
        inside.push_back(TableEntry{e.domain, e.domain});
        outside.push_back(e);
        break;
      case CylinderRelation::Split:
        for (Symbol s : followers_of(A, e.domain))
          stack.push_back(TableEntry{e.domain.appended(s), e.image.appended(s)});
        break;
    }
  }
  return {canonical_reduce(TableMap::assume_valid(A, std::move(inside))),
          canonical_reduce(TableMap::assume_valid(A, std::move(outside)))};
}

TableMap permutation_table(const TransitionMatrix& A, const std::vector<std::pair<Word, Word>>& moves) {
  std::vector<Word> sources;
  std::vector<TableEntry> entries;
  for (const auto& [from, to] : moves) {
    sources.push_back(from);
    entries.push_back(TableEntry{from, to});
  }
  const ClopenSet rest = complement(ClopenSet::from_words(A, std::move(sources)));
  for (const Word& w : rest.words()) entries.push_back(TableEntry{w, w});
  return canonical_reduce(TableMap::validate(A, std::move(entries)));
}

TableMap cylinder_swap(const TransitionMatrix& A, const Word& a, const Word& b) {
  if (comparable(a, b))
    throw Error(ErrorCode::NotDisjoint, "cylinders " + a.to_string() + " and " + b.to_string() + " intersect");
  std::vector<std::pair<Word, Word>> moves;
  moves.emplace_back(a, b);
  moves.emplace_back(b, a);
  return permutation_table(A, moves);
}

TableMap piecewise(const TransitionMatrix& A, const std::vector<std::pair<ClopenSet, TableMap>>& pieces) {
  for (const auto& [set, map] : pieces) {
    require_same_matrix(A, set.matrix());
    require_same_matrix(A, map.matrix());
  }
  std::vector<TableEntry> entries;
  std::vector<Word> stack{Word{}};
  while (!stack.empty()) {
    Word w = std::move(stack.back());
    stack.pop_back();
    const TableMap* owner = nullptr;
    bool touched = false;
    for (const auto& [set, map] : pieces) {
      CylinderRelation rel = set.locate(w);
      if (rel == CylinderRelation::Inside) {
        owner = &map;
        break;
      }
      touched = touched || rel == CylinderRelation::Split;
    }
    if (owner) {
      if (auto img = owner->rewrite(w)) {
        entries.push_back(TableEntry{std::move(w), std::move(*img)});
        continue;
      }
    } else if (!touched) {
      throw Error(ErrorCode::BadInput, "pieces do not cover cylinder " + w.to_string());
    }
    for (Symbol s : followers_of(A, w)) stack.push_back(w.appended(s));
  }
  return canonical_reduce(TableMap::validate(A, std::move(entries)));
}

}  // namespace sft
