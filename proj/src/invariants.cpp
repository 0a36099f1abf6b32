#include "sft/invariants.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "sft/error.hpp"

namespace sft {

std::vector<std::int64_t> BFGroup::coordinates(const std::vector<std::int64_t>& v) const {
  std::vector<std::int64_t> w = multiply(smith.P, v);
  std::vector<std::int64_t> out;
  const auto d = smith.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 1) continue;
    out.push_back(d[i] == 0 ? w[i] : mod_floor(w[i], d[i]));
  }
  return out;
}

PointedInvariant bowen_franks(const TransitionMatrix& A) {
  const std::size_t n = A.size();
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  IntMatrix a_minus_i(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t delta = i == j ? 1 : 0;
      m[i][j] = (A(static_cast<Symbol>(j + 1), static_cast<Symbol>(i + 1)) ? 1 : 0) - delta;
      a_minus_i[i][j] = (A(static_cast<Symbol>(i + 1), static_cast<Symbol>(j + 1)) ? 1 : 0) - delta;
    }
  }
  PointedInvariant out;
  out.group.n = n;
  out.group.smith = smith_normal_form(m);
  for (std::int64_t d : out.group.smith.diagonal()) {
    if (d == 0) ++out.group.free_rank;
    if (d >= 2) out.group.torsion.push_back(d);
  }
  out.unit = element_of(out.group, std::vector<std::int64_t>(n, 1));
  out.det = determinant(a_minus_i);
  return out;
}

GroupElement element_of(const BFGroup& G, const std::vector<std::int64_t>& v) {
  if (v.size() != G.n) throw Error(ErrorCode::BadInput, "vector length differs from the matrix size");
  return GroupElement{G.coordinates(v)};
}

GroupElement clopen_class(const BFGroup& G, const ClopenSet& X) {
  if (X.matrix().size() != G.n) throw Error(ErrorCode::MatrixMismatch, "clopen set and group come from different matrices");
  std::vector<std::int64_t> v(G.n, 0);
  for (const Word& w : X.words()) {
    if (w.empty()) {
      for (auto& c : v) c = checked_add(c, 1);
    } else {
      v[w.back() - 1] = checked_add(v[w.back() - 1], 1);
    }
  }
  return element_of(G, v);
}

std::string describe(const BFGroup& G) {
  std::string out;
  for (std::int64_t d : G.torsion) out += (out.empty() ? "" : " + ") + std::string("Z/") + std::to_string(d);
  if (G.free_rank > 0) out += (out.empty() ? "" : " + ") + std::string("Z^") + std::to_string(G.free_rank);
  return out.empty() ? "0" : out;
}

std::string describe(const GroupElement& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.coords.size(); ++i) out += (i ? "," : "") + std::to_string(x.coords[i]);
  return out + ")";
}

namespace {

std::vector<std::int64_t> prime_factors(std::int64_t d) {
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2; p <= d / p; ++p) {
    if (d % p) continue;
    primes.push_back(p);
    while (d % p == 0) d /= p;
  }
  if (d > 1) primes.push_back(d);
  return primes;
}

int valuation(std::int64_t x, std::int64_t p) {
  int v = 0;
  while (x != 0 && x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

std::int64_t power(std::int64_t p, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, p);
  return r;
}

// Group order, or nullopt above the orbit limit.
std::optional<std::int64_t> component_order(std::int64_t p, const std::vector<int>& exponents) {
  std::int64_t order = 1;
  for (int e : exponents) {
    for (int i = 0; i < e; ++i) {
      if (order > kOrbitLimit / p) return std::nullopt;
      order *= p;
    }
  }
  return order;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t r = 1 % m;
  base = mod_floor(base, m);
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Units generating (Z/p^e)^* for every e: a primitive root mod p^2 for odd
// p, and {-1, 5} for p = 2.
std::vector<std::int64_t> unit_generators(std::int64_t p) {
  if (p == 2) return {-1, 5};
  const auto factors = prime_factors(p - 1);
  for (std::int64_t g = 2;; ++g) {
    bool primitive = std::all_of(factors.begin(), factors.end(),
                                 [&](std::int64_t q) { return pow_mod(g, (p - 1) / q, p) != 1; });
    if (!primitive) continue;
    if (pow_mod(g, p - 1, p * p) == 1) g += p;
    return {g};
  }
}

// Projection of torsion coordinates onto the p-component.
std::vector<std::int64_t> p_part(const std::vector<std::int64_t>& torsion, const std::vector<std::int64_t>& t,
                                 std::int64_t p, std::vector<int>& exponents) {
  exponents.clear();
  std::vector<std::int64_t> x;
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    int e = valuation(torsion[i], p);
    if (e == 0) continue;
    exponents.push_back(e);
    x.push_back(mod_floor(t[i], power(p, e)));
  }
  return x;
}

}  // namespace

std::vector<int> ulm_sequence(std::int64_t p, const std::vector<int>& exponents, const std::vector<std::int64_t>& x) {
  std::vector<std::int64_t> y = x;
  std::vector<int> seq;
  while (true) {
    int h = -1;
    for (std::size_t i = 0; i < y.size(); ++i)
      if (y[i] != 0) {
        int v = valuation(y[i], p);
        h = h < 0 ? v : std::min(h, v);
      }
    if (h < 0) break;
    seq.push_back(h);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = mul_mod(y[i], p, power(p, exponents[i]));
  }
  return seq;
}

std::vector<std::vector<std::int64_t>> automorphism_orbit(std::int64_t p, const std::vector<int>& exponents,
                                                          const std::vector<std::int64_t>& x) {
  if (!component_order(p, exponents)) throw Error(ErrorCode::BadInput, "p-component too large for an explicit orbit");
  const std::size_t s = exponents.size();
  std::vector<std::int64_t> mod(s);
  std::vector<std::int64_t> radix(s);
  std::int64_t total = 1;
  for (std::size_t i = 0; i < s; ++i) {
    mod[i] = power(p, exponents[i]);
    radix[i] = total;
    total *= mod[i];
  }
  auto encode = [&](const std::vector<std::int64_t>& y) {
    std::int64_t code = 0;
    for (std::size_t i = 0; i < s; ++i) code += y[i] * radix[i];
    return code;
  };
  const auto units = unit_generators(p);

  std::vector<char> seen(static_cast<std::size_t>(total), 0);
  std::vector<std::vector<std::int64_t>> orbit{x};
  seen[encode(x)] = 1;
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    const std::vector<std::int64_t> y = orbit[head];
    auto visit = [&](std::vector<std::int64_t> z) {
      auto code = encode(z);
      if (!seen[code]) {
        seen[code] = 1;
        orbit.push_back(std::move(z));
      }
    };
    for (std::size_t i = 0; i < s; ++i) {
      for (std::int64_t g : units) {
        auto z = y;
        z[i] = mod_floor(mul_mod(mod_floor(g, mod[i]), z[i], mod[i]), mod[i]);
        visit(std::move(z));
      }
      for (std::size_t j = 0; j < s; ++j) {
        if (i == j) continue;
        // x_j += p^{max(0, e_j - e_i)} x_i is a homomorphism Z/p^{e_i} -> Z/p^{e_j}.
        const std::int64_t scale = power(p, std::max(0, exponents[j] - exponents[i]));
        auto z = y;
        z[j] = mod_floor(z[j] + mul_mod(scale, y[i], mod[j]), mod[j]);
        visit(std::move(z));
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

PointedDecision pointed_iso_decide(const BFGroup& G_A, const GroupElement& u_A, const BFGroup& G_B,
                                   const GroupElement& u_B) {
  if (!(G_A == G_B))
    return {PointedVerdict::NotIsomorphic, "groups differ: " + describe(G_A) + " vs " + describe(G_B)};
  const std::size_t s = G_A.torsion.size();
  const std::size_t r = G_A.free_rank;
  if (u_A.coords.size() != s + r || u_B.coords.size() != s + r)
    throw Error(ErrorCode::BadInput, "element coordinates do not match the group");

  std::vector<std::int64_t> t_a(u_A.coords.begin(), u_A.coords.begin() + s);
  std::vector<std::int64_t> t_b(u_B.coords.begin(), u_B.coords.begin() + s);
  std::int64_t content_a = 0;
  std::int64_t content_b = 0;
  for (std::size_t i = s; i < s + r; ++i) {
    content_a = std::gcd(content_a, u_A.coords[i]);
    content_b = std::gcd(content_b, u_B.coords[i]);
  }
  if (content_a != content_b)
    return {PointedVerdict::NotIsomorphic, "free parts have content " + std::to_string(content_a) + " vs " +
                                               std::to_string(content_b)};
  if (content_a == 1)
    return {PointedVerdict::Isomorphic, "free parts are primitive, so both elements are automorphic to a basis vector"};

  // Remaining question per prime: is alpha(t_a) - t_b in c T_p for some
  // automorphism alpha (c = 0 when the free parts vanish).
  std::vector<std::int64_t> primes;
  for (std::int64_t d : G_A.torsion)
    for (std::int64_t p : prime_factors(d))
      if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  std::sort(primes.begin(), primes.end());

  for (std::int64_t p : primes) {
    std::vector<int> exponents;
    const auto x_a = p_part(G_A.torsion, t_a, p, exponents);
    const auto x_b = p_part(G_A.torsion, t_b, p, exponents);
    const int coset = content_a == 0 ? -1 : valuation(content_a, p);
    if (coset == 0) continue;  // c T_p = T_p
    const std::string where = "p = " + std::to_string(p);

    if (!component_order(p, exponents)) {
      if (coset > 0)
        return {PointedVerdict::Undecided, where + ": component too large to search cosets of the free content"};
      if (ulm_sequence(p, exponents, x_a) != ulm_sequence(p, exponents, x_b))
        return {PointedVerdict::NotIsomorphic, where + ": Ulm sequences of the distinguished elements differ"};
      continue;
    }

    const auto orbit = automorphism_orbit(p, exponents, x_a);
    bool hit = false;
    if (coset < 0) {
      hit = std::binary_search(orbit.begin(), orbit.end(), x_b);
    } else {
      for (const auto& o : orbit) {
        bool inside = true;
        for (std::size_t i = 0; i < o.size() && inside; ++i)
          inside = (o[i] - x_b[i]) % power(p, std::min(coset, exponents[i])) == 0;
        if (inside) {
          hit = true;
          break;
        }
      }
    }
    if (!hit)
      return {PointedVerdict::NotIsomorphic, where + ": distinguished elements lie in different automorphism orbits"};
  }
  return {PointedVerdict::Isomorphic, "distinguished elements are automorphic in every p-component"};
}

IsoReport full_group_iso_decide(const TransitionMatrix& A, const TransitionMatrix& B) {
  IsoReport report;
  report.a = bowen_franks(A);
  report.b = bowen_franks(B);
  report.pointed = pointed_iso_decide(report.a.group, report.a.unit, report.b.group, report.b.unit);
  switch (report.pointed.verdict) {
    case PointedVerdict::NotIsomorphic:
      report.verdict = IsoVerdict::NotIsomorphic;
      report.reason = "pointed Bowen-Franks invariants differ: " + report.pointed.reason;
      break;
    case PointedVerdict::Undecided:
      report.verdict = IsoVerdict::Inconclusive;
      report.reason = "pointed invariant undecided: " + report.pointed.reason;
      break;
    case PointedVerdict::Isomorphic: {
      const bool sign_ok = (report.a.det >= 0) == (report.b.det >= 0) || report.a.det == 0 || report.b.det == 0;
      if (sign_ok) {
        report.verdict = IsoVerdict::Isomorphic;
        report.reason = "pointed invariants match and det(A-I) det(B-I) >= 0";
      } else {
        report.verdict = IsoVerdict::Inconclusive;
        report.reason = "pointed invariants match but det(A-I) det(B-I) < 0";
      }
      break;
    }
  }
  return report;
}

std::string to_string(PointedVerdict v) {
  switch (v) {
    case PointedVerdict::Isomorphic: return "isomorphic";
    case PointedVerdict::NotIsomorphic: return "not_isomorphic";
    case PointedVerdict::Undecided: return "undecided";
  }
  return "undecided";
}

std::string to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::Isomorphic: return "ISOMORPHIC";
    case IsoVerdict::NotIsomorphic: return "NOT_ISOMORPHIC";
    case IsoVerdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

std::string to_string(EquivalenceVerdict v) {
  switch (v) {
    case EquivalenceVerdict::Equivalent: return "equivalent";
    case EquivalenceVerdict::NotEquivalent: return "not_equivalent";
    case EquivalenceVerdict::Undecided: return "undecided";
  }
  return "undecided";
}

EquivalenceReport gamma_equivalent(const ClopenSet& U, const ClopenSet& V, const SearchBounds& bounds) {
  require_same_matrix(U.matrix(), V.matrix());
  const TransitionMatrix& A = U.matrix();
  const BFGroup G = bowen_franks(A).group;
  EquivalenceReport report;
  report.class_u = clopen_class(G, U);
  report.class_v = clopen_class(G, V);

  if (U.is_empty() || V.is_empty()) {
    if (U.is_empty() && V.is_empty()) {
      report.verdict = EquivalenceVerdict::Equivalent;
      report.witness = TableMap::identity(A);
      report.reason = "both sets are empty";
    } else {
      report.verdict = EquivalenceVerdict::NotEquivalent;
      report.reason = "the empty set is equivalent only to itself";
    }
    return report;
  }
  if (report.class_u != report.class_v) {
    report.verdict = EquivalenceVerdict::NotEquivalent;
    report.reason = "classes in the Bowen-Franks group differ (K-theoretic certificate)";
    return report;
  }

  SearchResult found =
      witness_search(A, [&](const TableMap& g) { return image_clopen(g, U) == V; }, bounds);
  report.examined = found.examined;
  report.budget_exhausted = found.budget_exhausted;
  if (found.witness) {
    report.verdict = EquivalenceVerdict::Equivalent;
    report.witness = std::move(found.witness);
    report.reason = "witness found by bounded search";
  } else {
    report.verdict = EquivalenceVerdict::Undecided;
    report.reason = found.budget_exhausted ? "search budget exhausted with equal classes"
                                           : "no witness within the search bounds although the classes agree";
  }
  return report;
}

}  // namespace sft
