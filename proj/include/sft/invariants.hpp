#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sft/clopen.hpp"
#include "sft/matrix.hpp"
#include "sft/smith.hpp"
#include "sft/table_map.hpp"
#include "sft/witness_search.hpp"

namespace sft {

/// The cokernel Z^N / (A^t - I) Z^N presented through its Smith form.
struct BFGroup {
  std::size_t n = 0;
  std::size_t free_rank = 0;
  /// Invariant factors d_1 | d_2 | ... | d_s, each >= 2.
  std::vector<std::int64_t> torsion;
  SmithForm smith;  // P (A^t - I) Q = D

  /// Coordinates of the class of v: torsion parts reduced mod d_i, then the
  /// free parts.
  std::vector<std::int64_t> coordinates(const std::vector<std::int64_t>& v) const;

  friend bool operator==(const BFGroup& a, const BFGroup& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};

struct GroupElement {
  std::vector<std::int64_t> coords;

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.coords == b.coords; }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
};

struct PointedInvariant {
  BFGroup group;
  GroupElement unit;       // class of [1, ..., 1]
  std::int64_t det = 0;    // det(A - I)
};

PointedInvariant bowen_franks(const TransitionMatrix& A);

/// Class of e_v in the group.
GroupElement element_of(const BFGroup& G, const std::vector<std::int64_t>& v);

/// Sum of e_{last(w)} over the canonical words; the full set maps to the unit.
GroupElement clopen_class(const BFGroup& G, const ClopenSet& X);

/// "Z/2 + Z/6 + Z^1", or "0" for the trivial group.
std::string describe(const BFGroup& G);
std::string describe(const GroupElement& x);

enum class PointedVerdict { Isomorphic, NotIsomorphic, Undecided };

struct PointedDecision {
  PointedVerdict verdict = PointedVerdict::Undecided;
  std::string reason;
};

/// Above this size a p-component is decided by Ulm sequences instead of an
/// explicit automorphism orbit.
inline constexpr std::int64_t kOrbitLimit = 1'000'000;

PointedDecision pointed_iso_decide(const BFGroup& G_A, const GroupElement& u_A, const BFGroup& G_B,
                                   const GroupElement& u_B);

/// Orbit of x under Aut(Z/p^e_1 + ... + Z/p^e_s), breadth first from the
/// elementary generators. Throws BadInput if the group exceeds kOrbitLimit.
std::vector<std::vector<std::int64_t>> automorphism_orbit(std::int64_t p, const std::vector<int>& exponents,
                                                          const std::vector<std::int64_t>& x);

/// Heights of x, px, p^2 x, ... until zero (-1 stands for infinity).
std::vector<int> ulm_sequence(std::int64_t p, const std::vector<int>& exponents, const std::vector<std::int64_t>& x);

enum class IsoVerdict { Isomorphic, NotIsomorphic, Inconclusive };

struct IsoReport {
  IsoVerdict verdict = IsoVerdict::Inconclusive;
  PointedInvariant a;
  PointedInvariant b;
  PointedDecision pointed;
  std::string reason;
};

IsoReport full_group_iso_decide(const TransitionMatrix& A, const TransitionMatrix& B);

std::string to_string(PointedVerdict v);
std::string to_string(IsoVerdict v);

enum class EquivalenceVerdict { Equivalent, NotEquivalent, Undecided };

struct EquivalenceReport {
  EquivalenceVerdict verdict = EquivalenceVerdict::Undecided;
  std::optional<TableMap> witness;
  GroupElement class_u;
  GroupElement class_v;
  std::size_t examined = 0;
  bool budget_exhausted = false;
  std::string reason;
};

/// Classes differ: not equivalent. Otherwise a bounded witness search for
/// gamma with gamma(U) = V. Throws MatrixMismatch.
EquivalenceReport gamma_equivalent(const ClopenSet& U, const ClopenSet& V, const SearchBounds& bounds);

std::string to_string(EquivalenceVerdict v);

}  // namespace sft
