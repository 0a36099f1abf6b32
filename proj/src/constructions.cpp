#include "sft/constructions.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "sft/error.hpp"

namespace sft {

namespace {

void require_nonempty(const ClopenSet& X, const char* name) {
  if (X.is_empty()) throw Error(ErrorCode::EmptyInput, std::string(name) + " is empty");
}

void require(bool holds, const std::string& hypothesis) {
  if (!holds) throw Error(ErrorCode::PreconditionFailed, "hypothesis fails: " + hypothesis);
}

// Canonical word of U whose cylinder contains x.
std::optional<Word> cylinder_containing(const ClopenSet& U, const EPPoint& x) {
  for (std::size_t len = 0; len <= U.depth(); ++len) {
    Word p = x.prefix(len);
    if (std::binary_search(U.words().begin(), U.words().end(), p)) return p;
  }
  return std::nullopt;
}

Word extend_least(const TransitionMatrix& A, Word w, std::size_t len) {
  while (w.size() < len) w.push_back(followers_of(A, w).front());
  return w;
}

// Lex-least mu extending the first word of `region` with U_mu a proper
// subset of the region and |mu| >= min_len. The least-follower walk meets
// a branching symbol within N steps, since otherwise A would be a
// permutation matrix.
Word proper_subcylinder(const ClopenSet& region, std::size_t min_len) {
  const TransitionMatrix& A = region.matrix();
  Word mu = region.words().front();
  bool proper = region.words().size() > 1;
  while (!proper || mu.size() < min_len) {
    const auto& next = followers_of(A, mu);
    proper = proper || next.size() > 1;
    mu.push_back(next.front());
  }
  return mu;
}

std::vector<Word> refine_to_length(const TransitionMatrix& A, const std::vector<Word>& words, std::size_t len) {
  std::vector<Word> out;
  std::vector<Word> stack(words.rbegin(), words.rend());
  while (!stack.empty()) {
    Word w = std::move(stack.back());
    stack.pop_back();
    if (w.size() >= len) {
      out.push_back(std::move(w));
      continue;
    }
    const auto& next = followers_of(A, w);
    for (auto it = next.rbegin(); it != next.rend(); ++it) stack.push_back(w.appended(*it));
  }
  return out;
}

// For each source nu (|nu| >= 1), a target mu.xi.nu inside the region, the
// targets pairwise disjoint. The region must be disjoint from the sources.
std::vector<std::pair<Word, Word>> place_cylinders(const std::vector<Word>& sources, ClopenSet region) {
  const TransitionMatrix& A = region.matrix();
  std::vector<std::pair<Word, Word>> out;
  for (const Word& nu : sources) {
    Word mu = proper_subcylinder(region, nu.size() + 1);
    Word target = mu + connect_path(A, mu.back(), nu.front()) + nu;
    region = subtract(region, ClopenSet::cylinder(A, target));
    out.emplace_back(nu, std::move(target));
  }
  return out;
}

// a and b act identically on X.
bool agree_on(const TableMap& a, const TableMap& b, const ClopenSet& X) {
  const TransitionMatrix& A = X.matrix();
  std::vector<Word> stack(X.words().begin(), X.words().end());
  while (!stack.empty()) {
    Word w = std::move(stack.back());
    stack.pop_back();
    auto ra = a.rewrite(w);
    auto rb = b.rewrite(w);
    if (ra && rb) {
      if (*ra != *rb) return false;
      continue;
    }
    for (Symbol s : followers_of(A, w)) stack.push_back(w.appended(s));
  }
  return true;
}

bool pairwise_disjoint(const std::vector<ClopenSet>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (!are_disjoint(sets[i], sets[j])) return false;
  return true;
}

bool is_partition(const std::vector<ClopenSet>& parts, const ClopenSet& whole) {
  ClopenSet acc = ClopenSet::empty(whole.matrix());
  for (const ClopenSet& p : parts) {
    if (p.is_empty()) return false;
    acc = unite(acc, p);
  }
  return acc == whole && pairwise_disjoint(parts);
}

std::optional<std::size_t> order_of(const TableMap& g, std::size_t bound) { return power_order(g, bound).order; }

}  // namespace

bool Verification::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

bool is_involution(const TableMap& g) { return !canonical_reduce(g).is_identity() && compose(g, g).is_identity(); }

InvolutionInto involution_into(const ClopenSet& U, const ClopenSet& Y, const EPPoint& x) {
  require_same_matrix(U.matrix(), Y.matrix());
  require_nonempty(U, "U");
  require_nonempty(Y, "Y");
  const TransitionMatrix& A = U.matrix();
  auto home = cylinder_containing(U, x);
  if (!home) throw Error(ErrorCode::BadInput, "point " + x.to_string() + " is not in U");

  Word mu = Y.words().front();
  if (mu.empty()) mu = Word{A.symbols().front()};
  const std::size_t n = mu.size();
  PathPair pair = distinct_path_pair(A, mu.back());
  const std::size_t k = pair.first.size();

  Word nu = x.prefix(std::max(home->size(), n + k + 2));
  Word tail = Word{pair.join} + connect_path(A, pair.join, nu.front()) + nu;
  Word target = mu + pair.first + tail;
  // The two candidates differ within their first n + k symbols, so at most
  // one of them shares its first n + k + 1 symbols with nu.
  if (target.prefix(n + k + 1) == nu.prefix(n + k + 1)) target = mu + pair.second + tail;

  return InvolutionInto{ClopenSet::cylinder(A, nu), cylinder_swap(A, nu, target)};
}

Verification verify_involution_into(const ClopenSet& U, const ClopenSet& Y, const EPPoint& x,
                                    const InvolutionInto& out) {
  Verification v;
  const ClopenSet& V = out.neighbourhood;
  ClopenSet moved = image_clopen(out.alpha, V);
  v.add("x in V", V.contains(x));
  v.add("V inside U", !V.is_empty() && is_subset(V, U));
  v.add("alpha(V) inside Y", is_subset(moved, Y));
  v.add("V and alpha(V) disjoint", are_disjoint(V, moved));
  v.add("alpha is an involution", is_involution(out.alpha));
  v.add("alpha is the identity off V and alpha(V)", is_subset(support(out.alpha), unite(V, moved)));
  return v;
}

TableMap moving_involution(const ClopenSet& U, const EPPoint& x) {
  require_nonempty(U, "U");
  const TransitionMatrix& A = U.matrix();
  auto home = cylinder_containing(U, x);
  if (!home) throw Error(ErrorCode::BadInput, "point " + x.to_string() + " is not in U");
  std::size_t len = home->size();
  while (subtract(U, ClopenSet::cylinder(A, x.prefix(len))).is_empty()) ++len;
  ClopenSet around = ClopenSet::cylinder(A, x.prefix(len));
  return involution_into(around, subtract(U, around), x).alpha;
}

Verification verify_moving_involution(const ClopenSet& U, const EPPoint& x, const TableMap& alpha) {
  Verification v;
  v.add("x in U", U.contains(x));
  v.add("alpha(x) != x", apply(alpha, x) != x);
  v.add("alpha is an involution", is_involution(alpha));
  v.add("support(alpha) inside U", in_local_subgroup(alpha, U));
  return v;
}

TableMap swap_involution(const ClopenSet& U, const ClopenSet& V, const TableMap& gamma) {
  require_same_matrix(U.matrix(), V.matrix());
  require_same_matrix(U.matrix(), gamma.matrix());
  require_nonempty(U, "U");
  require_nonempty(V, "V");
  if (!are_disjoint(U, V)) throw Error(ErrorCode::NotDisjoint, "U and V intersect");
  if (image_clopen(gamma, U) != V) throw Error(ErrorCode::NotAWitness, "gamma(U) differs from V");
  const TransitionMatrix& A = U.matrix();
  return piecewise(A, {{U, gamma}, {V, inverse(gamma)}, {complement(unite(U, V)), TableMap::identity(A)}});
}

Verification verify_swap_involution(const ClopenSet& U, const ClopenSet& V, const TableMap& gamma,
                                    const TableMap& alpha) {
  Verification v;
  v.add("alpha is an involution", is_involution(alpha));
  v.add("alpha(U) = V", image_clopen(alpha, U) == V);
  v.add("alpha = gamma on U", agree_on(alpha, gamma, U));
  v.add("alpha = gamma^-1 on V", agree_on(alpha, inverse(gamma), V));
  v.add("alpha is the identity off U and V", is_subset(support(alpha), unite(U, V)));
  return v;
}

TableMap cylinder_involution(const Word& nu, const ClopenSet& V) {
  const TransitionMatrix& A = V.matrix();
  if (nu.size() <= 1) throw Error(ErrorCode::BadInput, "nu must have length at least 2");
  if (!is_admissible(A, nu)) throw Error(ErrorCode::InadmissibleWord, "word " + nu.to_string() + " is not admissible");
  ClopenSet source = ClopenSet::cylinder(A, nu);
  ClopenSet room = subtract(V, source);
  if (room.is_empty()) throw Error(ErrorCode::BadInput, "V lies inside U_nu");
  Word mu = extend_least(A, room.words().front(), nu.size() + 1);
  Word target = mu + connect_path(A, mu.back(), nu.front()) + nu;
  return cylinder_swap(A, nu, target);
}

Verification verify_cylinder_involution(const Word& nu, const ClopenSet& V, const TableMap& alpha) {
  Verification v;
  const TransitionMatrix& A = V.matrix();
  ClopenSet source = ClopenSet::cylinder(A, nu);
  ClopenSet moved = image_clopen(alpha, source);
  v.add("alpha(U_nu) inside V", is_subset(moved, V));
  v.add("alpha is an involution", is_involution(alpha));
  v.add("alpha is the identity off U_nu and alpha(U_nu)", is_subset(support(alpha), unite(source, moved)));
  return v;
}

Transport clopen_transport(const ClopenSet& U, const ClopenSet& W) {
  require_same_matrix(U.matrix(), W.matrix());
  require_nonempty(U, "U");
  require_nonempty(W, "W");
  if (!are_disjoint(U, W)) throw Error(ErrorCode::NotDisjoint, "U and W intersect");
  const TransitionMatrix& A = U.matrix();

  Transport out{TableMap::identity(A), {}, refine_to_length(A, U.words(), 2)};
  std::vector<std::pair<Word, Word>> moves;
  for (auto& [from, to] : place_cylinders(out.pieces, W)) {
    out.factors.push_back(cylinder_swap(A, from, to));
    moves.emplace_back(from, to);
    moves.emplace_back(to, from);
  }
  out.alpha = permutation_table(A, moves);
  return out;
}

Verification verify_clopen_transport(const ClopenSet& U, const ClopenSet& W, const Transport& out) {
  Verification v;
  const TransitionMatrix& A = U.matrix();
  ClopenSet moved = image_clopen(out.alpha, U);
  v.add("alpha(U) inside W", is_subset(moved, W));
  v.add("alpha is an involution", is_involution(out.alpha));
  v.add("alpha is the identity off U and alpha(U)", is_subset(support(out.alpha), unite(U, moved)));

  std::vector<ClopenSet> piece_sets;
  for (const Word& w : out.pieces) piece_sets.push_back(ClopenSet::cylinder(A, w));
  v.add("pieces partition U", is_partition(piece_sets, U));

  std::vector<ClopenSet> supports;
  TableMap product = TableMap::identity(A);
  bool factors_ok = out.factors.size() == out.pieces.size();
  for (std::size_t i = 0; i < out.factors.size(); ++i) {
    supports.push_back(support(out.factors[i]));
    product = compose(product, out.factors[i]);
    factors_ok = factors_ok && is_involution(out.factors[i]);
    if (i < out.pieces.size()) factors_ok = factors_ok && is_subset(piece_sets[i], supports.back());
  }
  v.add("factors are involutions on their pieces", factors_ok);
  v.add("factor supports pairwise disjoint", pairwise_disjoint(supports));
  v.add("product of factors = alpha", product == canonical_reduce(out.alpha));
  return v;
}

PairedTransport paired_transport(const PairedTransportInput& in) {
  const TransitionMatrix& A = in.O.matrix();
  for (const ClopenSet* X : {&in.U, &in.V, &in.W, &in.W2}) require_same_matrix(A, X->matrix());
  require_same_matrix(A, in.gamma.matrix());
  ClopenSet outside = complement(in.O);
  require(!in.U.is_empty(), "U nonempty");
  require(!in.W.is_empty(), "W nonempty");
  require(!in.W2.is_empty(), "W' nonempty");
  require(is_subset(in.U, in.O), "U inside O");
  require(is_subset(in.V, outside), "V inside the complement of O");
  require(is_subset(in.W, in.O), "W inside O");
  require(is_subset(in.W2, outside), "W' inside the complement of O");
  require(are_disjoint(in.U, in.W), "U and W disjoint");
  require(are_disjoint(in.V, in.W2), "V and W' disjoint");
  require(image_clopen(in.gamma, in.U) == in.V, "gamma(U) = V");

  TableMap swap = swap_involution(in.U, in.V, in.gamma);

  // Cylinder pairs (nu, swap(nu)) covering U, both words of length >= 2.
  std::vector<std::pair<Word, Word>> pairs;
  std::vector<Word> stack(in.U.words().rbegin(), in.U.words().rend());
  while (!stack.empty()) {
    Word w = std::move(stack.back());
    stack.pop_back();
    auto img = swap.rewrite(w);
    if (img && w.size() >= 2 && img->size() >= 2) {
      pairs.emplace_back(std::move(w), std::move(*img));
      continue;
    }
    const auto& next = followers_of(A, w);
    for (auto it = next.rbegin(); it != next.rend(); ++it) stack.push_back(w.appended(*it));
  }

  PairedTransport out;
  std::vector<Word> nus;
  std::vector<Word> mus;
  for (const auto& [nu, mu] : pairs) {
    out.u_parts.push_back(ClopenSet::cylinder(A, nu));
    out.v_parts.push_back(ClopenSet::cylinder(A, mu));
    nus.push_back(nu);
    mus.push_back(mu);
  }
  for (const auto& [from, to] : place_cylinders(nus, in.W)) out.alphas.push_back(cylinder_swap(A, from, to));
  for (const auto& [from, to] : place_cylinders(mus, in.W2)) out.betas.push_back(cylinder_swap(A, from, to));
  return out;
}

Verification verify_paired_transport(const PairedTransportInput& in, const PairedTransport& out) {
  Verification v;
  const std::size_t n = out.u_parts.size();
  const bool shapes = out.v_parts.size() == n && out.alphas.size() == n && out.betas.size() == n && n > 0;
  v.add("one alpha and one beta per piece", shapes);
  if (!shapes) return v;
  ClopenSet outside = complement(in.O);
  v.add("U pieces partition U", is_partition(out.u_parts, in.U));
  v.add("V pieces partition V", is_partition(out.v_parts, in.V));

  bool matched = true;
  bool alpha_into = true;
  bool beta_into = true;
  bool alpha_local = true;
  bool beta_local = true;
  bool involutions = true;
  bool alpha_tight = true;
  bool beta_tight = true;
  std::vector<ClopenSet> alpha_images;
  std::vector<ClopenSet> beta_images;
  for (std::size_t i = 0; i < n; ++i) {
    matched = matched && image_clopen(in.gamma, out.u_parts[i]) == out.v_parts[i];
    alpha_images.push_back(image_clopen(out.alphas[i], out.u_parts[i]));
    beta_images.push_back(image_clopen(out.betas[i], out.v_parts[i]));
    alpha_into = alpha_into && is_subset(alpha_images.back(), in.W);
    beta_into = beta_into && is_subset(beta_images.back(), in.W2);
    alpha_local = alpha_local && in_local_subgroup(out.alphas[i], in.O);
    beta_local = beta_local && in_local_subgroup(out.betas[i], outside);
    involutions = involutions && is_involution(out.alphas[i]) && is_involution(out.betas[i]);
    alpha_tight = alpha_tight && is_subset(support(out.alphas[i]), unite(out.u_parts[i], alpha_images.back()));
    beta_tight = beta_tight && is_subset(support(out.betas[i]), unite(out.v_parts[i], beta_images.back()));
  }
  v.add("gamma(U_i) = V_i", matched);
  v.add("alpha_i(U_i) inside W", alpha_into);
  v.add("beta_i(V_i) inside W'", beta_into);
  v.add("alpha_i in Gamma_O", alpha_local);
  v.add("beta_i in Gamma_{O^c}", beta_local);
  v.add("alpha_i and beta_i are involutions", involutions);
  v.add("alpha_i supported on U_i and its image", alpha_tight);
  v.add("beta_i supported on V_i and its image", beta_tight);
  v.add("alpha_i(U_i) pairwise disjoint", pairwise_disjoint(alpha_images));
  v.add("beta_i(V_i) pairwise disjoint", pairwise_disjoint(beta_images));
  return v;
}

Verification verify_split_invariant(const TableMap& gamma, const ClopenSet& O,
                                    const std::pair<TableMap, TableMap>& factors) {
  Verification v;
  const auto& [inner, outer] = factors;
  v.add("gamma(O) = O", image_clopen(gamma, O) == O);
  v.add("gamma1 in Gamma_O", in_local_subgroup(inner, O));
  v.add("gamma2 in Gamma_{O^c}", in_local_subgroup(outer, complement(O)));
  v.add("gamma1 o gamma2 = gamma", same_element(compose(inner, outer), gamma));
  v.add("gamma1 and gamma2 commute", commutes(inner, outer));
  return v;
}

MinimalityWitness minimality_witness(const ClopenSet& U, const ClopenSet& V) {
  require_same_matrix(U.matrix(), V.matrix());
  require_nonempty(U, "U");
  require_nonempty(V, "V");
  const TransitionMatrix& A = U.matrix();
  if (is_subset(U, V)) return MinimalityWitness{U, TableMap::identity(A)};
  if (are_disjoint(U, V)) return MinimalityWitness{U, clopen_transport(U, V).alpha};

  ClopenSet spill = subtract(U, V);
  ClopenSet room = subtract(V, U);
  // The transport is supported in spill and room, so it fixes U meet V.
  if (!room.is_empty()) return MinimalityWitness{U, clopen_transport(spill, room).alpha};

  ClopenSet source = ClopenSet::cylinder(A, spill.words().front());
  return MinimalityWitness{source, clopen_transport(source, V).alpha};
}

Verification verify_minimality_witness(const ClopenSet& U, const ClopenSet& V, const MinimalityWitness& out) {
  Verification v;
  const bool v_proper_in_u = is_subset(V, U) && V != U;
  v.add("source nonempty", !out.source.is_empty());
  v.add("source inside U", is_subset(out.source, U));
  v.add("source = U unless V is a proper subset of U", v_proper_in_u || out.source == U);
  v.add("gamma(source) inside V", is_subset(image_clopen(out.gamma, out.source), V));
  return v;
}

FreePair free_pair(const ClopenSet& O) {
  require_nonempty(O, "O");
  const TransitionMatrix& A = O.matrix();
  const std::size_t n = A.size();
  const Word& nu = O.words().front();
  EPPoint x = least_continuation(A, nu);

  // Least position p > |nu| (0-based p >= |nu|) and gap k >= 2 with x_p = x_{p+k}.
  std::size_t p = nu.size();
  std::size_t k = 0;
  for (;; ++p) {
    for (std::size_t gap = 2; gap <= 2 * n + 2 && k == 0; ++gap)
      if (x.at(p) == x.at(p + gap)) k = gap;
    if (k) break;
  }
  const Symbol u = x.at(p);
  const Word zeta = x.prefix(p + 1);
  const Word xi_bar = x.prefix(p + k + 1).drop(p + 1);

  // exact[t][s]: a walk of exactly t steps leads from s to u.
  const std::size_t max_len = xi_bar.size() + 2 * n + 2;
  std::vector<std::vector<char>> exact(max_len + 1, std::vector<char>(n + 1, 0));
  exact[0][u] = 1;
  for (std::size_t t = 1; t <= max_len; ++t)
    for (Symbol s : A.symbols())
      for (Symbol b : A.followers(s))
        if (exact[t - 1][b]) exact[t][s] = 1;

  // Lex-least eta of least length >= 2 with u.eta.u admissible and eta.u
  // incomparable with xi.u.
  std::optional<Word> eta_bar;
  Word eta;
  std::function<bool(std::size_t)> search = [&](std::size_t len) -> bool {
    if (eta.size() == len) {
      Word candidate = eta.appended(u);
      if (comparable(candidate, xi_bar)) return false;
      eta_bar = std::move(candidate);
      return true;
    }
    const auto& next = eta.empty() ? A.followers(u) : A.followers(eta.back());
    for (Symbol s : next) {
      if (!exact[len - eta.size()][s]) continue;
      eta.push_back(s);
      if (search(len)) return true;
      eta.pop_back();
    }
    return false;
  };
  for (std::size_t len = 2; len < max_len && !eta_bar; ++len) search(len);
  if (!eta_bar) throw Error(ErrorCode::Internal, "no second return path found");

  const Word a = zeta + xi_bar;
  const Word b = zeta + *eta_bar;
  const Word c = b + *eta_bar;
  const Word d = b + xi_bar;
  return FreePair{cylinder_swap(A, a, b), permutation_table(A, {{c, d}, {d, a}, {a, c}}), ClopenSet::cylinder(A, a)};
}

Verification verify_free_pair(const ClopenSet& O, const FreePair& out) {
  Verification v;
  ClopenSet once = image_clopen(out.phi, out.F);
  ClopenSet twice = image_clopen(out.phi, once);
  v.add("psi in Gamma_O", in_local_subgroup(out.psi, O));
  v.add("phi in Gamma_O", in_local_subgroup(out.phi, O));
  v.add("psi has order 2", order_of(out.psi, 3) == std::optional<std::size_t>(2));
  v.add("phi has order 3", order_of(out.phi, 4) == std::optional<std::size_t>(3));
  v.add("F nonempty", !out.F.is_empty());
  v.add("F inside O", is_subset(out.F, O));
  v.add("phi(F) and phi^2(F) disjoint", are_disjoint(once, twice));
  v.add("phi(F) and phi^2(F) inside psi(F)", is_subset(unite(once, twice), image_clopen(out.psi, out.F)));
  return v;
}

TableMap localize_conjugate(const TableMap& eta, const ClopenSet& U, const ClopenSet& O) {
  const TransitionMatrix& A = O.matrix();
  require_same_matrix(A, U.matrix());
  require_same_matrix(A, eta.matrix());
  const TableMap reduced = canonical_reduce(eta);
  require(!reduced.is_identity(), "eta is not the identity");
  require(in_local_subgroup(reduced, O), "eta in Gamma_O");
  require(!U.is_empty(), "U nonempty");
  require(is_subset(U, O), "U inside O");

  // U = U1 + U2 with both parts nonempty.
  std::vector<Word> parts = U.words();
  while (parts.size() == 1) parts = refine_to_length(A, parts, parts.front().size() + 1);
  const ClopenSet U1 = ClopenSet::cylinder(A, parts.front());
  const ClopenSet U2 = subtract(U, U1);

  // A cylinder Y = U_w inside a moved domain cylinder with Y and eta(Y)
  // disjoint, leaving room in U1 outside eta(Y) and in U2 outside Y.
  std::optional<ClopenSet> Y;
  std::optional<ClopenSet> eta_Y;
  const std::size_t budget = 1'000'000;
  std::size_t examined = 0;
  for (const TableEntry& e : reduced.entries()) {
    if (e.domain == e.image) continue;
    const std::size_t limit = e.domain.size() + e.image.size() + 2 * A.size() + 2;
    Word ext;
    std::function<bool(std::size_t)> search = [&](std::size_t len) -> bool {
      if (ext.size() == len) {
        if (++examined > budget) throw Error(ErrorCode::Internal, "search for a displaced cylinder exhausted");
        Word w = e.domain + ext;
        Word img = e.image + ext;
        if (comparable(w, img)) return false;
        ClopenSet y = ClopenSet::cylinder(A, w);
        ClopenSet ey = ClopenSet::cylinder(A, img);
        if (subtract(U1, ey).is_empty() || subtract(U2, y).is_empty()) return false;
        Y = std::move(y);
        eta_Y = std::move(ey);
        return true;
      }
      for (Symbol s : followers_of(A, e.domain + ext)) {
        ext.push_back(s);
        if (search(len)) return true;
        ext.pop_back();
      }
      return false;
    };
    for (std::size_t len = 0; len <= limit && !Y; ++len) search(len);
    if (Y) break;
  }
  if (!Y) throw Error(ErrorCode::Internal, "no displaced cylinder found");

  const ClopenSet first_room = subtract(U1, *eta_Y);
  InvolutionInto alpha = involution_into(first_room, *Y, least_continuation(A, first_room.words().front()));
  const ClopenSet target = image_clopen(reduced, image_clopen(alpha.alpha, alpha.neighbourhood));
  const ClopenSet second_room = subtract(U2, *Y);
  InvolutionInto beta = involution_into(second_room, target, least_continuation(A, second_room.words().front()));
  return compose(alpha.alpha, beta.alpha);
}

Verification verify_localize_conjugate(const TableMap& eta, const ClopenSet& U, const ClopenSet& O,
                                       const TableMap& gamma) {
  Verification v;
  TableMap conjugate = compose(inverse(gamma), compose(eta, gamma));
  v.add("gamma in Gamma_O", in_local_subgroup(gamma, O));
  v.add("gamma^-1 eta gamma moves a point of U", !are_disjoint(support(conjugate), U));
  return v;
}

}  // namespace sft
