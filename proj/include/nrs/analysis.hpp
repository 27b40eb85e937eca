#ifndef NRS_ANALYSIS_HPP
#define NRS_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "nrs/normal_forms.hpp"
#include "nrs/nr_structure.hpp"

namespace nrs {

/// Normal form of one generator of span{R~(X_i, X_j)}; `error` set when it cannot be classified.
struct CurvatureTag {
  Matrix op;
  std::optional<NormalFormTag> tag;
  std::optional<std::string> error;
};

struct AnalysisReport {
  ValidationReport validation;
  /// The remaining fields are present only for valid structures.
  std::optional<GeometryVerdict> geometry;
  std::optional<std::vector<Matrix>> holonomy;
  std::optional<DecompositionVerdict> decomposition;
  std::vector<CurvatureTag> curvature_tags;

  bool valid() const { return validation.valid(); }
};

AnalysisReport analyze(const NRStructure& s);

}  // namespace nrs

#endif
