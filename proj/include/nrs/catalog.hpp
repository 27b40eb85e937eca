#ifndef NRS_CATALOG_HPP
#define NRS_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nrs/lie_algebra.hpp"
#include "nrs/nr_structure.hpp"
#include "nrs/rational.hpp"

namespace nrs {

/// A named family with parameter values. Greek parameters are spelled out (alpha, beta, delta,
/// eta, lambda, epsilon).
struct FamilySpec {
  std::string name;
  std::map<std::string, Rational> params;
};

/// loren1, loren2, dosdos1, dosdos2, sl_lorentz, sl_neutral, oscillator
const std::vector<std::string>& family_names();
/// Parameter names of a family in canonical order. Throws ParamOutOfDomain for unknown names.
const std::vector<std::string>& family_parameters(const std::string& name);
/// One-line description used by `catalog list`.
std::string family_description(const std::string& name);

struct FamilyInstance {
  std::optional<NRStructure> structure;
  std::optional<ReductiveSplit> split;
  std::vector<std::string> notes;
  /// The structure carries only the tensor values the source states; it is not expected to validate.
  bool partial = false;
  /// Nondegenerate subspace along which the family is known to split.
  std::optional<Subspace> suggested_witness;
};

/// Throws ParamOutOfDomain for unknown families, missing or extra parameters, or values outside the domain.
FamilyInstance make_family(const FamilySpec& spec);

/// Closed-form predictions; unset fields are not predicted for these parameters.
struct ExpectedProperties {
  std::optional<bool> flat;
  std::optional<bool> locally_symmetric;
  std::optional<Decomposability> decomposable;
  std::optional<std::size_t> holonomy_dim;
};

ExpectedProperties expected_properties(const FamilySpec& spec);

/// Curvature generators of the Lorentz families: A X1 = X3, A X2 = -X3, A X3 = X1+X2, and
/// B X1 = X4, B X2 = -X4, B X4 = X1+X2.
Matrix lorentz_generator_a();
Matrix lorentz_generator_b();
/// Curvature generators of the neutral families: A X2 = X4, A X3 = -X4, A X4 = X2+X3, and
/// B X1 = X2+X3, B X2 = -X1, B X3 = X1.
Matrix neutral_generator_a();
Matrix neutral_generator_b();

}  // namespace nrs

#endif
