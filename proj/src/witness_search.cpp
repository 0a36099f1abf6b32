#include "sft/witness_search.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "sft/error.hpp"

namespace sft {

namespace {

using Code = std::vector<Word>;

struct BudgetStop {};

class CodeGenerator {
 public:
  CodeGenerator(const TransitionMatrix& A, std::size_t& spent, std::size_t budget)
      : A_(A), spent_(spent), budget_(budget) {}

  /// Complete prefix codes below the root with exactly `size` words of
  /// length <= max_len, sorted.
  std::vector<Code> codes(std::size_t size, std::size_t max_len) {
    std::vector<Code> out = suffix_codes(0, max_len, size);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  // Codes of suffixes after a word ending in `last` (0 for the root).
  const std::vector<Code>& suffix_codes(Symbol last, std::size_t len_left, std::size_t size) {
    auto key = std::make_tuple(last, len_left, size);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Code> result;
    if (size == 1) {
      result.push_back(Code{Word{}});
    } else if (len_left > 0) {
      const auto& children = last == 0 ? A_.symbols() : A_.followers(last);
      if (children.size() <= size) {
        Code partial;
        distribute(children, 0, len_left - 1, size, partial, result);
      }
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

  void distribute(const std::vector<Symbol>& children, std::size_t index, std::size_t len_left, std::size_t remaining,
                  Code& partial, std::vector<Code>& out) {
    const std::size_t others = children.size() - index - 1;
    if (index + 1 == children.size()) {
      for (const Code& tail : suffix_codes(children[index], len_left, remaining)) emit(children[index], tail, partial, out);
      return;
    }
    for (std::size_t take = 1; take + others <= remaining; ++take) {
      const std::vector<Code>& options = suffix_codes(children[index], len_left, take);
      for (const Code& tail : options) {
        const std::size_t mark = partial.size();
        for (const Word& w : tail) partial.push_back(Word{children[index]} + w);
        distribute(children, index + 1, len_left, remaining - take, partial, out);
        partial.resize(mark);
      }
    }
  }

  void emit(Symbol head, const Code& tail, const Code& partial, std::vector<Code>& out) {
    if (++spent_ > budget_) throw BudgetStop{};
    Code code = partial;
    for (const Word& w : tail) code.push_back(Word{head} + w);
    out.push_back(std::move(code));
  }

  const TransitionMatrix& A_;
  std::size_t& spent_;
  std::size_t budget_;
  std::map<std::tuple<Symbol, std::size_t, std::size_t>, std::vector<Code>> memo_;
};

}  // namespace

SearchResult witness_search(const TransitionMatrix& A, const std::function<bool(const TableMap&)>& predicate,
                            const SearchBounds& bounds) {
  if (bounds.depth < 1 || bounds.image_length < 1) throw Error(ErrorCode::BadInput, "search bounds must be at least 1");
  SearchResult result;
  std::size_t spent = 0;
  CodeGenerator generator(A, spent, bounds.budget);
  const std::size_t max_entries = admissible_words(A, bounds.depth).size();

  try {
    for (std::size_t n = 1; n <= max_entries; ++n) {
      std::vector<Code> domains = generator.codes(n, bounds.depth);
      if (domains.empty()) continue;
      std::vector<Code> images = generator.codes(n, bounds.image_length);
      for (const Code& domain : domains) {
        for (const Code& image : images) {
          std::vector<int> domain_class;
          for (const Word& w : domain) domain_class.push_back(follower_class(A, w));
          std::vector<int> image_class;
          for (const Word& w : image) image_class.push_back(follower_class(A, w));
          {
            auto a = domain_class;
            auto b = image_class;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b) continue;
          }

          std::vector<char> used(n, 0);
          std::vector<TableEntry> entries(n);
          std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
            if (i == n) {
              if (++spent > bounds.budget) throw BudgetStop{};
              ++result.examined;
              TableMap candidate = TableMap::assume_valid(A, entries);
              if (!predicate(candidate)) return false;
              result.witness = std::move(candidate);
              return true;
            }
            for (std::size_t j = 0; j < n; ++j) {
              if (used[j] || image_class[j] != domain_class[i]) continue;
              used[j] = 1;
              entries[i] = TableEntry{domain[i], image[j]};
              if (assign(i + 1)) return true;
              used[j] = 0;
            }
            return false;
          };
          if (assign(0)) return result;
        }
      }
    }
  } catch (const BudgetStop&) {
    result.budget_exhausted = true;
  }
  return result;
}

}  // namespace sft
