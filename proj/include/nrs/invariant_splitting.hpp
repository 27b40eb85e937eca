#ifndef NRS_INVARIANT_SPLITTING_HPP
#define NRS_INVARIANT_SPLITTING_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nrs/matrix.hpp"
#include "nrs/metric_space.hpp"

namespace nrs {

/// Outcome of searching for a proper nondegenerate subspace W invariant under a family of
/// skew-adjoint operators (equivalently, a metric-self-adjoint idempotent P != 0, I commuting
/// with every operator; W = image of P).
struct SplittingResult {
  /// Whether such a subspace exists over the reals. Always decided.
  bool exists = false;
  /// A rational witness W, when one was found.
  std::optional<Subspace> witness;
  /// Whether `witness` satisfies the caller's preference predicate.
  bool witness_preferred = false;
  std::size_t commutant_dim = 0;
  std::size_t radical_dim = 0;
  /// Short human-readable justification of the verdict.
  std::string certificate;
};

/// Self-adjoint operators commuting with every generator, as a list of basis matrices.
std::vector<Matrix> self_adjoint_commutant(const MetricSpace& s, const std::vector<Matrix>& generators);

/// The self-adjoint commutant is a Jordan algebra. A nontrivial self-adjoint idempotent exists iff
/// the quotient by its nil radical (the radical of the trace form) is neither R nor a spin factor
/// with negative-definite form. Rational witnesses come from splitting minimal polynomials of
/// commutant elements into coprime factors.
SplittingResult find_invariant_splitting(const MetricSpace& s, const std::vector<Matrix>& generators,
                                         const std::function<bool(const Subspace&)>& prefer = {});

/// The existence verdict of find_invariant_splitting without the rational witness search.
bool has_invariant_splitting(const MetricSpace& s, const std::vector<Matrix>& generators);

/// All generators map w into itself.
bool is_invariant(const Subspace& w, const std::vector<Matrix>& generators);

}  // namespace nrs

#endif
