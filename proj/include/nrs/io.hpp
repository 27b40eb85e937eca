#ifndef NRS_IO_HPP
#define NRS_IO_HPP

#include <string>

#include <json.hpp>

#include "nrs/analysis.hpp"
#include "nrs/catalog.hpp"
#include "nrs/lie_algebra.hpp"
#include "nrs/normal_forms.hpp"
#include "nrs/nr_structure.hpp"

namespace nrs {

using Json = nlohmann::json;

/// A parsed document that remembers its source text so errors can name a line.
class JsonDocument {
 public:
  /// Throws Error(Parse) with the line of the syntax error.
  static JsonDocument parse(std::string text);

  const Json& root() const { return root_; }
  /// Line (1-based) of the first occurrence of "key" in the source; 0 when unknown.
  std::size_t line_of(const std::string& key) const;
  /// Line of a dotted field path ("torsion.1,2.3"), matching each component after the previous one;
  /// the deepest component found wins. 0 when even the first is missing.
  std::size_t line_of_path(const std::string& field) const;
  [[noreturn]] void fail(const std::string& field, const std::string& key, const std::string& message) const;

 private:
  std::string text_;
  Json root_;
};

/// Rationals are written as reduced "n/d" strings ("3" for integers).
Json to_json(const Rational& r);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const MetricSpace& s);
Json to_json(const Subspace& s);
Json to_json(const NRStructure& s);
Json to_json(const LieAlgebra& g);
Json to_json(const ReductiveSplit& split);
Json to_json(const NormalFormTag& tag);
Json to_json(const ValidationReport& rep);
Json to_json(const DecompositionVerdict& d);
Json to_json(const AnalysisReport& rep);
/// Catalog output: the NRStructure keys at top level plus family, params, split and notes.
Json to_json(const FamilySpec& spec, const FamilyInstance& inst);

/// Readers take the JSON node, a dotted field path for messages, and the document for line lookup.
Rational rational_from_json(const Json& j, const std::string& field, const JsonDocument& doc);
Matrix matrix_from_json(const Json& j, const std::string& field, const JsonDocument& doc);
MetricSpace metric_from_json(const Json& j, const std::string& field, const JsonDocument& doc);
Subspace subspace_from_json(const Json& j, std::size_t ambient, const std::string& field, const JsonDocument& doc);
LieAlgebra lie_algebra_from_json(const Json& j, const std::string& field, const JsonDocument& doc);
NRStructure structure_from_json(const JsonDocument& doc);

/// Deterministic rendering: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace nrs

#endif
