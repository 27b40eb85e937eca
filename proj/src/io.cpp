#include "nrs/io.hpp"

#include <algorithm>

#include "nrs/error.hpp"

namespace nrs {

// ---------------------------------------------------------------- document

JsonDocument JsonDocument::parse(std::string text) {
  JsonDocument doc;
  doc.text_ = std::move(text);
  try {
    doc.root_ = Json::parse(doc.text_);
  } catch (const Json::parse_error& e) {
    const std::size_t pos = std::min<std::size_t>(e.byte, doc.text_.size());
    const std::size_t line = 1 + std::count(doc.text_.begin(), doc.text_.begin() + static_cast<long>(pos == 0 ? 0 : pos - 1), '\n');
    throw Error(ErrorKind::Parse, "document (line " + std::to_string(line) + "): malformed JSON");
  }
  return doc;
}

std::size_t JsonDocument::line_of(const std::string& key) const {
  const auto pos = text_.find("\"" + key + "\"");
  if (pos == std::string::npos) return 0;
  return 1 + std::count(text_.begin(), text_.begin() + static_cast<long>(pos), '\n');
}

std::size_t JsonDocument::line_of_path(const std::string& field) const {
  std::size_t pos = 0;
  bool found = false;
  std::size_t start = 0;
  while (start <= field.size()) {
    auto end = field.find('.', start);
    if (end == std::string::npos) end = field.size();
    std::string part = field.substr(start, end - start);
    part = part.substr(0, part.find('['));
    const auto hit = part.empty() ? std::string::npos : text_.find("\"" + part + "\"", pos);
    if (hit == std::string::npos) break;
    pos = hit + part.size() + 2;
    found = true;
    start = end + 1;
  }
  if (!found) return 0;
  return 1 + std::count(text_.begin(), text_.begin() + static_cast<long>(pos), '\n');
}

void JsonDocument::fail(const std::string& field, const std::string& key, const std::string& message) const {
  std::size_t line = line_of_path(field);
  if (line == 0) line = line_of(key);
  std::string where = "field '" + field + "'";
  if (line != 0) where += " (line " + std::to_string(line) + ")";
  throw Error(ErrorKind::Parse, where + ": " + message);
}

namespace {

/// Last component of a dotted field path; used to locate the field in the source text.
std::string key_of(const std::string& field) {
  const auto dot = field.rfind('.');
  std::string k = dot == std::string::npos ? field : field.substr(dot + 1);
  const auto bracket = k.find('[');
  return bracket == std::string::npos ? k : k.substr(0, bracket);
}

std::pair<std::size_t, std::size_t> parse_pair(const std::string& key, std::size_t n, const std::string& field,
                                                const JsonDocument& doc) {
  const auto comma = key.find(',');
  std::size_t i = 0, j = 0;
  try {
    if (comma == std::string::npos) throw std::invalid_argument("no comma");
    std::size_t used = 0;
    i = std::stoul(key.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("junk");
    j = std::stoul(key.substr(comma + 1), &used);
    if (used != key.size() - comma - 1) throw std::invalid_argument("junk");
  } catch (const std::exception&) {
    doc.fail(field + "." + key, key, "expected an index pair \"i,j\"");
  }
  if (i < 1 || j < 1 || i > n || j > n) doc.fail(field + "." + key, key, "index out of range 1.." + std::to_string(n));
  if (i == j) doc.fail(field + "." + key, key, "indices must differ");
  return {i - 1, j - 1};
}

std::size_t parse_index(const std::string& key, std::size_t n, const std::string& field, const JsonDocument& doc) {
  std::size_t k = 0;
  try {
    std::size_t used = 0;
    k = std::stoul(key, &used);
    if (used != key.size()) throw std::invalid_argument("junk");
  } catch (const std::exception&) {
    doc.fail(field + "." + key, key, "expected a 1-based index");
  }
  if (k < 1 || k > n) doc.fail(field + "." + key, key, "index out of range 1.." + std::to_string(n));
  return k - 1;
}

std::string pair_key(std::size_t i, std::size_t j) { return std::to_string(i + 1) + "," + std::to_string(j + 1); }

}  // namespace

// ---------------------------------------------------------------- writers

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const MetricSpace& s) { return Json{{"labels", s.labels()}, {"gram", to_json(s.gram())}}; }

Json to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& v : s.vectors()) basis.push_back(to_json(v));
  return Json{{"dim", s.dim()}, {"basis", basis}};
}

Json to_json(const NRStructure& s) {
  const std::size_t n = s.space.dim();
  Json torsion = Json::object();
  Json curvature = Json::object();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector& t = s.torsion.value(i, j);
      if (!is_zero(t)) {
        Json entry = Json::object();
        for (std::size_t k = 0; k < n; ++k)
          if (!t[k].is_zero()) entry[std::to_string(k + 1)] = to_json(t[k]);
        torsion[pair_key(i, j)] = entry;
      }
      const Matrix& r = s.curvature.value(i, j);
      if (!r.is_zero()) curvature[pair_key(i, j)] = to_json(r);
    }
  }
  return Json{{"metric", to_json(s.space)}, {"torsion", torsion}, {"curvature", curvature}};
}

Json to_json(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Json brackets = Json::object();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector& v = g.bracket(i, j);
      if (is_zero(v)) continue;
      Json entry = Json::object();
      for (std::size_t k = 0; k < n; ++k)
        if (!v[k].is_zero()) entry[std::to_string(k + 1)] = to_json(v[k]);
      brackets[pair_key(i, j)] = entry;
    }
  }
  return Json{{"labels", g.labels()}, {"brackets", brackets}};
}

Json to_json(const ReductiveSplit& split) {
  auto one_based = [](const std::vector<std::size_t>& idx) {
    Json out = Json::array();
    for (auto i : idx) out.push_back(i + 1);
    return out;
  };
  return Json{{"algebra", to_json(split.algebra)},
              {"m", one_based(split.m_indices)},
              {"h", one_based(split.h_indices)},
              {"metric_on_m", to_json(split.metric_on_m)}};
}

Json to_json(const NormalFormTag& tag) {
  Json params = Json::object();
  for (const auto& [k, v] : tag.parameters) params[k] = to_json(v);
  Json out{{"family", to_string(tag.family)},
           {"parameters", params},
           {"char_poly", tag.char_poly.to_string("x")},
           {"char_poly_coefficients", to_json(Vector(tag.char_poly.coeffs()))},
           {"reducible", tag.reducible}};
  if (tag.nilpotency_index) out["nilpotency_index"] = *tag.nilpotency_index;
  if (tag.note) out["note"] = *tag.note;
  return out;
}

Json to_json(const ValidationReport& rep) {
  Json checks = Json::object();
  for (const auto& c : rep.checks) {
    Json entry{{"passed", c.passed}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks[c.name] = entry;
  }
  return Json{{"valid", rep.valid()}, {"checks", checks}};
}

Json to_json(const DecompositionVerdict& d) {
  Json out{{"verdict", to_string(d.verdict)}, {"route", d.route}};
  if (d.witness) out["witness"] = to_json(*d.witness);
  if (d.projection_conditions) out["projection_conditions"] = *d.projection_conditions;
  if (!d.note.empty()) out["note"] = d.note;
  return out;
}

Json to_json(const AnalysisReport& rep) {
  Json out = to_json(rep.validation);
  if (rep.geometry) {
    out["flat"] = rep.geometry->flat;
    out["locally_symmetric"] = rep.geometry->locally_symmetric;
    out["symmetry_reason"] = to_string(rep.geometry->reason);
  }
  if (rep.holonomy) {
    Json basis = Json::array();
    for (const auto& m : *rep.holonomy) basis.push_back(to_json(m));
    out["holonomy_dim"] = rep.holonomy->size();
    out["holonomy_basis"] = basis;
  }
  if (rep.decomposition) {
    out["decomposable"] = to_string(rep.decomposition->verdict);
    out["decomposition"] = to_json(*rep.decomposition);
  }
  if (rep.valid()) {
    Json tags = Json::array();
    for (const auto& ct : rep.curvature_tags) {
      Json entry{{"operator", to_json(ct.op)}};
      if (ct.tag) entry["tag"] = to_json(*ct.tag);
      if (ct.error) entry["error"] = *ct.error;
      tags.push_back(entry);
    }
    out["curvature_tags"] = tags;
  }
  return out;
}

Json to_json(const FamilySpec& spec, const FamilyInstance& inst) {
  Json out = inst.structure ? to_json(*inst.structure) : Json::object();
  Json params = Json::object();
  for (const auto& [k, v] : spec.params) params[k] = to_json(v);
  out["family"] = spec.name;
  out["params"] = params;
  if (inst.split) out["split"] = to_json(*inst.split);
  if (!inst.notes.empty()) out["notes"] = inst.notes;
  if (inst.partial) out["partial"] = true;
  if (inst.suggested_witness) out["suggested_witness"] = to_json(*inst.suggested_witness);
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- readers

Rational rational_from_json(const Json& j, const std::string& field, const JsonDocument& doc) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) doc.fail(field, key_of(field), "expected a rational string \"n/d\" or an integer");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error&) {
    doc.fail(field, key_of(field), "malformed rational \"" + j.get<std::string>() + "\"");
  }
}

Matrix matrix_from_json(const Json& j, const std::string& field, const JsonDocument& doc) {
  if (!j.is_array() || j.empty()) doc.fail(field, key_of(field), "expected a non-empty array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].empty()) doc.fail(field, key_of(field), "row " + std::to_string(r + 1) + " is not a non-empty array");
    if (r == 0) cols = j[r].size();
    if (j[r].size() != cols) doc.fail(field, key_of(field), "rows have different lengths");
  }
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rational_from_json(j[r][c], field + "[" + std::to_string(r + 1) + "][" + std::to_string(c + 1) + "]", doc);
  return m;
}

MetricSpace metric_from_json(const Json& j, const std::string& field, const JsonDocument& doc) {
  if (!j.is_object()) doc.fail(field, key_of(field), "expected an object with \"gram\"");
  if (!j.contains("gram")) doc.fail(field + ".gram", key_of(field), "missing");
  const Matrix gram = matrix_from_json(j["gram"], field + ".gram", doc);
  if (!gram.is_square()) doc.fail(field + ".gram", "gram", "not square");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& l = j["labels"];
    if (!l.is_array() || l.size() != gram.rows()) doc.fail(field + ".labels", "labels", "expected one string per basis vector");
    for (const auto& x : l) {
      if (!x.is_string()) doc.fail(field + ".labels", "labels", "labels must be strings");
      labels.push_back(x.get<std::string>());
    }
  }
  try {
    return validate_metric(gram, labels);
  } catch (const Error& e) {
    doc.fail(field + ".gram", "gram", e.what());
  }
}

Subspace subspace_from_json(const Json& j, std::size_t ambient, const std::string& field, const JsonDocument& doc) {
  const Json& basis = j.is_object() && j.contains("basis") ? j["basis"] : j;
  if (!basis.is_array()) doc.fail(field, key_of(field), "expected an array of basis vectors");
  std::vector<Vector> vs;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (!basis[b].is_array() || basis[b].size() != ambient) doc.fail(field, key_of(field), "basis vectors must have length " + std::to_string(ambient));
    Vector v;
    for (std::size_t k = 0; k < ambient; ++k) v.push_back(rational_from_json(basis[b][k], field, doc));
    vs.push_back(v);
  }
  return Subspace::span(vs, ambient);
}

LieAlgebra lie_algebra_from_json(const Json& j, const std::string& field, const JsonDocument& doc) {
  if (!j.is_object() || !j.contains("labels")) doc.fail(field + ".labels", "labels", "missing");
  const Json& l = j["labels"];
  if (!l.is_array() || l.empty()) doc.fail(field + ".labels", "labels", "expected a non-empty array of strings");
  std::vector<std::string> labels;
  for (const auto& x : l) {
    if (!x.is_string()) doc.fail(field + ".labels", "labels", "labels must be strings");
    labels.push_back(x.get<std::string>());
  }
  const std::size_t n = labels.size();
  LieAlgebra g(n, labels);
  if (!j.contains("brackets")) return g;
  const Json& br = j["brackets"];
  if (!br.is_object()) doc.fail(field + ".brackets", "brackets", "expected an object");
  std::vector<bool> seen(n * n, false);
  for (const auto& [key, entry] : br.items()) {
    const auto [i, jj] = parse_pair(key, n, field + ".brackets", doc);
    if (seen[i * n + jj] || seen[jj * n + i]) doc.fail(field + ".brackets." + key, key, "pair given twice");
    seen[i * n + jj] = true;
    if (!entry.is_object()) doc.fail(field + ".brackets." + key, key, "expected an object {\"k\": rational}");
    Vector v(n);
    for (const auto& [k, val] : entry.items()) {
      v[parse_index(k, n, field + ".brackets." + key, doc)] = rational_from_json(val, field + ".brackets." + key + "." + k, doc);
    }
    g.set_bracket(i, jj, v);
  }
  return g;
}

NRStructure structure_from_json(const JsonDocument& doc) {
  const Json& j = doc.root();
  if (!j.is_object()) doc.fail("document", "", "expected an object with metric, torsion, curvature");
  if (!j.contains("metric")) doc.fail("metric", "metric", "missing");
  NRStructure s;
  s.space = metric_from_json(j["metric"], "metric", doc);
  const std::size_t n = s.space.dim();
  s.torsion = TorsionTensor(n);
  s.curvature = CurvatureTensor(n);
  std::vector<bool> seen_t(n * n, false), seen_r(n * n, false);

  if (j.contains("torsion")) {
    const Json& t = j["torsion"];
    if (!t.is_object()) doc.fail("torsion", "torsion", "expected an object");
    for (const auto& [key, entry] : t.items()) {
      const auto [a, b] = parse_pair(key, n, "torsion", doc);
      if (seen_t[a * n + b] || seen_t[b * n + a]) doc.fail("torsion." + key, key, "pair given twice");
      seen_t[a * n + b] = true;
      if (!entry.is_object()) doc.fail("torsion." + key, key, "expected an object {\"k\": rational}");
      Vector v(n);
      for (const auto& [k, val] : entry.items()) v[parse_index(k, n, "torsion." + key, doc)] = rational_from_json(val, "torsion." + key + "." + k, doc);
      s.torsion.set(a, b, v);
    }
  }
  if (j.contains("curvature")) {
    const Json& r = j["curvature"];
    if (!r.is_object()) doc.fail("curvature", "curvature", "expected an object");
    for (const auto& [key, entry] : r.items()) {
      const auto [a, b] = parse_pair(key, n, "curvature", doc);
      if (seen_r[a * n + b] || seen_r[b * n + a]) doc.fail("curvature." + key, key, "pair given twice");
      seen_r[a * n + b] = true;
      const Matrix m = matrix_from_json(entry, "curvature." + key, doc);
      if (m.rows() != n || m.cols() != n) doc.fail("curvature." + key, key, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
      s.curvature.set(a, b, m);
    }
  }
  return s;
}

}  // namespace nrs
