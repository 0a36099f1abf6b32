#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sft/clopen.hpp"
#include "sft/table_map.hpp"
#include "sft/word.hpp"

// Witness-producing versions of the local constructions on Gamma_A. Each
// construction has a matching `verify_*` that re-derives every displayed
// postcondition from the witness alone. Wherever a construction has a free
// choice it takes the lexicographically least candidate, so outputs are
// reproducible.
namespace sft {

struct Check {
  std::string name;
  bool pass = false;
};

struct Verification {
  std::vector<Check> checks;

  void add(std::string name, bool pass) { checks.push_back(Check{std::move(name), pass}); }
  bool all_pass() const;
};

/// alpha != id and alpha o alpha = id.
bool is_involution(const TableMap& g);

// ---------------------------------------------------------------------------
// Swapping a small neighbourhood of a point into a target set.

struct InvolutionInto {
  ClopenSet neighbourhood;  // V, a cylinder with x in V inside U
  TableMap alpha;
};

/// alpha(V) inside Y, alpha^2 = id, alpha = id off V and alpha(V).
/// U and Y may overlap. Throws EmptyInput, BadInput (x outside U).
InvolutionInto involution_into(const ClopenSet& U, const ClopenSet& Y, const EPPoint& x);
Verification verify_involution_into(const ClopenSet& U, const ClopenSet& Y, const EPPoint& x,
                                    const InvolutionInto& out);

/// An involution supported in U that moves x. Throws EmptyInput, BadInput.
TableMap moving_involution(const ClopenSet& U, const EPPoint& x);
Verification verify_moving_involution(const ClopenSet& U, const EPPoint& x, const TableMap& alpha);

/// From gamma with gamma(U) = V for disjoint U, V: the involution that is
/// gamma on U, gamma^-1 on V and the identity elsewhere.
/// Throws EmptyInput, NotDisjoint, NotAWitness.
TableMap swap_involution(const ClopenSet& U, const ClopenSet& V, const TableMap& gamma);
Verification verify_swap_involution(const ClopenSet& U, const ClopenSet& V, const TableMap& gamma,
                                    const TableMap& alpha);

/// Involution carrying U_nu into V for |nu| > 1 and V not inside U_nu.
/// Throws BadInput.
TableMap cylinder_involution(const Word& nu, const ClopenSet& V);
Verification verify_cylinder_involution(const Word& nu, const ClopenSet& V, const TableMap& alpha);

// ---------------------------------------------------------------------------
// Transport of clopen sets.

struct Transport {
  TableMap alpha;
  /// One cylinder exchange per piece; supports are pairwise disjoint, so the
  /// factors commute and multiply to alpha in any order.
  std::vector<TableMap> factors;
  std::vector<Word> pieces;
};

/// alpha(U) inside W, alpha^2 = id, support in U and alpha(U), for disjoint
/// nonempty U, W. Throws EmptyInput, NotDisjoint.
Transport clopen_transport(const ClopenSet& U, const ClopenSet& W);
Verification verify_clopen_transport(const ClopenSet& U, const ClopenSet& W, const Transport& out);

struct PairedTransportInput {
  ClopenSet O;
  ClopenSet U;
  ClopenSet V;
  ClopenSet W;
  ClopenSet W2;  // W'
  TableMap gamma;
};

struct PairedTransport {
  std::vector<ClopenSet> u_parts;
  std::vector<ClopenSet> v_parts;
  std::vector<TableMap> alphas;  // in Gamma_O
  std::vector<TableMap> betas;   // in Gamma_{O^c}
};

/// Partitions U, V into gamma-matched pieces and sends the U-pieces into W
/// by involutions supported in O, the V-pieces into W' by involutions
/// supported off O. Throws PreconditionFailed naming the failed hypothesis.
PairedTransport paired_transport(const PairedTransportInput& in);
Verification verify_paired_transport(const PairedTransportInput& in, const PairedTransport& out);

Verification verify_split_invariant(const TableMap& gamma, const ClopenSet& O,
                                    const std::pair<TableMap, TableMap>& factors);

struct MinimalityWitness {
  /// The set actually carried into V: U itself unless V is a proper subset
  /// of U, in which case the first canonical cylinder of U minus V.
  ClopenSet source;
  TableMap gamma;
};

/// gamma(source) inside V. Throws EmptyInput.
MinimalityWitness minimality_witness(const ClopenSet& U, const ClopenSet& V);
Verification verify_minimality_witness(const ClopenSet& U, const ClopenSet& V, const MinimalityWitness& out);

struct FreePair {
  TableMap psi;  // order 2
  TableMap phi;  // order 3
  ClopenSet F;
};

/// psi, phi supported in O with phi(F), phi^2(F) disjoint inside psi(F).
/// Throws EmptyInput.
FreePair free_pair(const ClopenSet& O);
Verification verify_free_pair(const ClopenSet& O, const FreePair& out);

/// gamma in Gamma_O such that gamma^-1 eta gamma moves points of U.
/// Throws PreconditionFailed.
TableMap localize_conjugate(const TableMap& eta, const ClopenSet& U, const ClopenSet& O);
Verification verify_localize_conjugate(const TableMap& eta, const ClopenSet& U, const ClopenSet& O,
                                       const TableMap& gamma);

}  // namespace sft
