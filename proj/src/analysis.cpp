#include "nrs/analysis.hpp"

#include "nrs/error.hpp"

namespace nrs {

AnalysisReport analyze(const NRStructure& s) {
  AnalysisReport rep;
  rep.validation = validate_structure(s);
  if (!rep.valid()) return rep;
  rep.geometry = classify_geometry(s);
  rep.holonomy = holonomy(s);
  rep.decomposition = decompose(s);
  for (const auto& op : curvature_span(s.curvature)) {
    CurvatureTag ct{op, std::nullopt, std::nullopt};
    try {
      ct.tag = classify_operator(s.space, op);
    } catch (const Error& e) {
      ct.error = e.what();
    }
    rep.curvature_tags.push_back(std::move(ct));
  }
  return rep;
}

}  // namespace nrs
