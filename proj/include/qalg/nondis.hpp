#ifndef QALG_NONDIS_HPP
#define QALG_NONDIS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qalg/representation.hpp"

namespace qalg {

/// v, w in fAe (algebra coordinates) with independent images in R^l/R^{l+1}.
struct NonDistWitness {
  std::size_t e = 0;
  std::size_t f = 0;
  std::size_t l = 0;
  Vector v;
  Vector w;
};

struct DistributivityVerdict {
  bool distributive = true;
  std::optional<NonDistWitness> witness;
};

DistributivityVerdict is_distributive(const PathAlgebra& a);

struct Reduction {
  AlgebraPtr algebra;
  NonDistWitness witness;      // coordinates in the reduced algebra
  std::size_t kernel_dim = 0;  // dim K
};

/// Quotient by the ideal generated by R^{l+1}, Jv, vJ, Jw, wJ.
Reduction reduce_by_K(const AlgebraPtr& a, const NonDistWitness& witness);

struct ConstructionState {
  AlgebraPtr reduced_algebra;
  NonDistWitness witness;
  std::size_t n = 0;
  std::size_t d = 0;  // dim Ae
  Representation M;   // n copies of Ae
  std::vector<Vector> generators;  // x_1..x_n in global coordinates of M
  Submodule U0;
  Submodule H;
  Submodule maximal_U;
  Quotient N;  // M / maximal_U
  Submodule V0;

  /// Global coordinates in M of the element a x_i (a in Ae, i zero-based).
  Vector embed(const Vector& a, std::size_t i) const;

 private:
  friend ConstructionState build_construction(const AlgebraPtr&, const NonDistWitness&, std::size_t);
  std::vector<std::size_t> position_;  // algebra basis index -> coordinate in Ae, or npos
  Projective projective_;
};

ConstructionState build_construction(const AlgebraPtr& reduced, const NonDistWitness& witness,
                                     std::size_t n);

/// Members of the two flags, as dimensions of the modules they produce.
struct FlagRanges {
  std::size_t m_side_low = 0;   // M / maximal_U
  std::size_t m_side_high = 0;  // M / U0
  std::size_t n_side_low = 0;   // V0
  std::size_t n_side_high = 0;  // V0 + JN
};

FlagRanges flag_ranges(const ConstructionState& s);

struct IndecomposableModule {
  Representation module;
  IndecomposabilityCertificate certificate;
  std::vector<RelationViolation> violations;
  std::size_t n = 0;   // copies used, 1 for local quotients of Ae
  std::string source;  // "local", "M-flag" or "N-flag"
};

/// Throws Error("algebra is distributive") when no witness exists.
IndecomposableModule indecomposable_of_dimension(const AlgebraPtr& a, std::size_t m);

/// Targets lo..hi, sharing one construction per copy count. Independent
/// targets are evaluated on up to `threads` workers; the result is ordered by
/// target. A failing target is reported through `errors` and leaves a
/// default-constructed entry.
struct RangeResult {
  std::vector<std::size_t> targets;
  std::vector<std::optional<IndecomposableModule>> modules;
  std::vector<std::string> errors;
};

RangeResult indecomposables_in_range(const AlgebraPtr& a, std::size_t lo, std::size_t hi,
                                     unsigned threads = 0);

/// M/U0 on n generators, rebound to the input algebra.
struct Truncation {
  Representation module;
  std::size_t d = 0;
  std::size_t n = 0;
  ConstructionState state;
};

Truncation truncated_W(const AlgebraPtr& a, const NonDistWitness& witness, std::size_t n);

}  // namespace qalg

#endif  // QALG_NONDIS_HPP
