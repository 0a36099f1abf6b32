#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sft {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

IntMatrix identity_matrix(std::size_t n);
/// Throws Overflow.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
std::vector<std::int64_t> multiply(const IntMatrix& a, const std::vector<std::int64_t>& v);
IntMatrix transpose(const IntMatrix& a);

/// Exact determinant by fraction-free (Bareiss) elimination. Throws Overflow.
std::int64_t determinant(const IntMatrix& m);

/// P * M * Q = D with P, Q unimodular and D diagonal, d_1 | d_2 | ... with
/// nonnegative entries and the zeros last.
struct SmithForm {
  IntMatrix P;
  IntMatrix D;
  IntMatrix Q;

  std::vector<std::int64_t> diagonal() const;
};

/// Computes the form and re-checks all of its properties before returning;
/// a failed self-check throws Internal. Throws Overflow.
SmithForm smith_normal_form(const IntMatrix& m);

/// True iff P * M * Q = D, det P = det Q = +-1, D diagonal with the
/// divisibility chain.
bool is_smith_form(const IntMatrix& m, const SmithForm& s);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
/// Representative in [0, m) for m >= 1.
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

}  // namespace sft
