#include "sft/smith.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

#include "sft/error.hpp"

namespace sft {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
  return r;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix id(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  IntMatrix out(rows, std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < cols; ++j) out[i][j] = checked_add(out[i][j], checked_mul(a[i][k], b[k][j]));
  return out;
}

std::vector<std::int64_t> multiply(const IntMatrix& a, const std::vector<std::int64_t>& v) {
  std::vector<std::int64_t> out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < v.size(); ++k) out[i] = checked_add(out[i], checked_mul(a[i][k], v[k]));
  return out;
}

IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return {};
  IntMatrix t(a[0].size(), std::vector<std::int64_t>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

std::int64_t determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  IntMatrix a = m;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 num = static_cast<__int128>(a[i][j]) * a[k][k] - static_cast<__int128>(a[i][k]) * a[k][j];
        __int128 q = num / prev;  // exact by Sylvester's identity
        if (q > INT64_MAX || q < INT64_MIN) throw Error(ErrorCode::Overflow, "determinant overflows 64 bits");
        a[i][j] = static_cast<std::int64_t>(q);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return checked_mul(sign, a[n - 1][n - 1]);
}

std::vector<std::int64_t> SmithForm::diagonal() const {
  std::vector<std::int64_t> d;
  for (std::size_t i = 0; i < D.size() && i < (D.empty() ? 0 : D[0].size()); ++i) d.push_back(D[i][i]);
  return d;
}

namespace {

struct Reducer {
  IntMatrix a;
  IntMatrix P;
  IntMatrix Q;
  std::size_t rows;
  std::size_t cols;

  // row_i += k * row_j (applied to a and P)
  void add_row(std::size_t i, std::size_t j, std::int64_t k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < cols; ++c) a[i][c] = checked_add(a[i][c], checked_mul(k, a[j][c]));
    for (std::size_t c = 0; c < rows; ++c) P[i][c] = checked_add(P[i][c], checked_mul(k, P[j][c]));
  }
  void add_col(std::size_t i, std::size_t j, std::int64_t k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < rows; ++r) a[r][i] = checked_add(a[r][i], checked_mul(k, a[r][j]));
    for (std::size_t r = 0; r < cols; ++r) Q[r][i] = checked_add(Q[r][i], checked_mul(k, Q[r][j]));
  }
  void swap_rows(std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(P[i], P[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : Q) std::swap(row[i], row[j]);
  }
  void negate_row(std::size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : P[i]) x = -x;
  }

  void run() {
    const std::size_t n = std::min(rows, cols);
    for (std::size_t t = 0; t < n; ++t) {
      while (true) {
        // Smallest nonzero entry of the trailing block as pivot.
        std::size_t pr = rows;
        std::size_t pc = cols;
        for (std::size_t i = t; i < rows; ++i)
          for (std::size_t j = t; j < cols; ++j)
            if (a[i][j] != 0 && (pr == rows || std::llabs(a[i][j]) < std::llabs(a[pr][pc]))) {
              pr = i;
              pc = j;
            }
        if (pr == rows) return;
        swap_rows(t, pr);
        swap_cols(t, pc);

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
          add_row(i, t, -(a[i][t] / a[t][t]));
          clean = clean && a[i][t] == 0;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          add_col(j, t, -(a[t][j] / a[t][t]));
          clean = clean && a[t][j] == 0;
        }
        if (!clean) continue;

        // The pivot must divide the rest of the block.
        std::size_t bad = rows;
        for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a[i][j] % a[t][t] != 0) {
              bad = i;
              break;
            }
        if (bad == rows) break;
        add_row(t, bad, 1);
      }
      if (a[t][t] < 0) negate_row(t);
    }
  }
};

}  // namespace

bool is_smith_form(const IntMatrix& m, const SmithForm& s) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  if (multiply(multiply(s.P, m), s.Q) != s.D) return false;
  if (std::llabs(determinant(s.P)) != 1 || std::llabs(determinant(s.Q)) != 1) return false;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (i != j && s.D[i][j] != 0) return false;
  auto d = s.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0) return false;
    if (i + 1 < d.size()) {
      if (d[i] == 0 && d[i + 1] != 0) return false;
      if (d[i] != 0 && d[i + 1] % d[i] != 0) return false;
    }
  }
  return true;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  Reducer r{m, identity_matrix(rows), identity_matrix(cols), rows, cols};
  r.run();
  SmithForm s{std::move(r.P), std::move(r.a), std::move(r.Q)};
  if (!is_smith_form(m, s)) throw Error(ErrorCode::Internal, "Smith normal form failed its self-check");
  return s;
}

}  // namespace sft
