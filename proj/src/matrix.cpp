#include "sft/matrix.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "sft/error.hpp"

namespace sft {

struct TransitionMatrix::Data {
  std::size_t n = 0;
  std::vector<std::uint8_t> bits;  // row-major
  std::vector<std::vector<Symbol>> followers;  // index s - 1
  std::vector<Symbol> symbols;
  std::vector<int> classes;  // index s - 1
  int full_class = 0;
};

namespace {

std::vector<bool> reachable_from(const std::vector<std::vector<Symbol>>& followers, Symbol start) {
  std::vector<bool> seen(followers.size() + 1, false);
  std::vector<Symbol> stack(followers[start - 1].begin(), followers[start - 1].end());
  while (!stack.empty()) {
    Symbol s = stack.back();
    stack.pop_back();
    if (seen[s]) continue;
    seen[s] = true;
    for (Symbol t : followers[s - 1]) {
      if (!seen[t]) stack.push_back(t);
    }
  }
  return seen;
}

}  // namespace

TransitionMatrix::TransitionMatrix(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

TransitionMatrix TransitionMatrix::validate(const std::vector<std::vector<int>>& raw) {
  const std::size_t n = raw.size();
  if (n < 2) throw Error(ErrorCode::Malformed, "matrix size must be at least 2, got " + std::to_string(n));
  auto data = std::make_shared<Data>();
  data->n = n;
  data->bits.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n) {
      throw Error(ErrorCode::Malformed, "row " + std::to_string(i + 1) + " has " +
                                            std::to_string(raw[i].size()) + " entries, expected " +
                                            std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      int v = raw[i][j];
      if (v != 0 && v != 1) {
        throw Error(ErrorCode::Malformed, "entry (" + std::to_string(i + 1) + "," +
                                              std::to_string(j + 1) + ") is not 0 or 1");
      }
      data->bits[i * n + j] = static_cast<std::uint8_t>(v);
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) any = any || data->bits[i * n + j];
    if (!any) throw Error(ErrorCode::NotEssential, "row " + std::to_string(i + 1) + " is zero");
  }
  for (std::size_t j = 0; j < n; ++j) {
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) any = any || data->bits[i * n + j];
    if (!any) throw Error(ErrorCode::NotEssential, "column " + std::to_string(j + 1) + " is zero");
  }

  data->followers.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    data->symbols.push_back(static_cast<Symbol>(i + 1));
    for (std::size_t j = 0; j < n; ++j) {
      if (data->bits[i * n + j]) data->followers[i].push_back(static_cast<Symbol>(j + 1));
    }
  }

  for (Symbol i = 1; i <= static_cast<Symbol>(n); ++i) {
    auto seen = reachable_from(data->followers, i);
    for (Symbol j = 1; j <= static_cast<Symbol>(n); ++j) {
      if (!seen[j]) {
        throw Error(ErrorCode::NotIrreducible,
                    "state " + std::to_string(j) + " is not reachable from state " + std::to_string(i));
      }
    }
  }

  bool permutation = std::all_of(data->followers.begin(), data->followers.end(),
                                 [](const auto& f) { return f.size() == 1; });
  if (permutation) {
    throw Error(ErrorCode::ConditionIFails,
                "every state has exactly one successor (permutation matrix); the shift space is finite");
  }

  std::map<std::vector<Symbol>, int> ids;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = ids.emplace(data->followers[i], static_cast<int>(ids.size()));
    data->classes.push_back(it->second);
  }
  auto [it, inserted] = ids.emplace(data->symbols, static_cast<int>(ids.size()));
  data->full_class = it->second;

  return TransitionMatrix(std::move(data));
}

TransitionMatrix TransitionMatrix::full_shift(std::size_t n) {
  return validate(std::vector<std::vector<int>>(n, std::vector<int>(n, 1)));
}

std::size_t TransitionMatrix::size() const noexcept { return data_->n; }

bool TransitionMatrix::operator()(Symbol from, Symbol to) const {
  return data_->bits[(from - 1) * data_->n + (to - 1)] != 0;
}

const std::vector<Symbol>& TransitionMatrix::followers(Symbol s) const { return data_->followers[s - 1]; }

const std::vector<Symbol>& TransitionMatrix::symbols() const noexcept { return data_->symbols; }

int TransitionMatrix::follower_class(Symbol s) const { return data_->classes[s - 1]; }

int TransitionMatrix::full_class() const noexcept { return data_->full_class; }

std::vector<std::vector<int>> TransitionMatrix::rows() const {
  std::vector<std::vector<int>> out(data_->n, std::vector<int>(data_->n));
  for (std::size_t i = 0; i < data_->n; ++i)
    for (std::size_t j = 0; j < data_->n; ++j) out[i][j] = data_->bits[i * data_->n + j];
  return out;
}

bool operator==(const TransitionMatrix& a, const TransitionMatrix& b) {
  return a.data_ == b.data_ || (a.data_->n == b.data_->n && a.data_->bits == b.data_->bits);
}

}  // namespace sft
