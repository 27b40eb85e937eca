// nrs: command-line front end for naturally reductive structure analysis.
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "nrs/analysis.hpp"
#include "nrs/catalog.hpp"
#include "nrs/error.hpp"
#include "nrs/io.hpp"
#include "nrs/normal_forms.hpp"

using namespace nrs;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kMalformed = 2;

JsonDocument load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return JsonDocument::parse(buf.str());
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

/// Operator files: a bare matrix, or {"matrix": [[...]], "metric": {...}}.
std::pair<Matrix, std::optional<MetricSpace>> load_operator(const std::string& path) {
  const JsonDocument doc = load(path);
  const Json& j = doc.root();
  if (j.is_array()) return {matrix_from_json(j, "matrix", doc), std::nullopt};
  if (!j.is_object() || !j.contains("matrix")) doc.fail("matrix", "matrix", "missing");
  std::optional<MetricSpace> metric;
  if (j.contains("metric")) metric = metric_from_json(j["metric"], "metric", doc);
  return {matrix_from_json(j["matrix"], "matrix", doc), metric};
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << dump(j);
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error(ErrorKind::Parse, "cannot write '" + out_path + "'");
  out << dump(j);
}

struct FileResult {
  Json report;
  int code = kOk;
  std::string error;
  std::string summary;
};

FileResult analyze_file(const std::string& path, bool full) {
  FileResult r;
  try {
    const JsonDocument doc = load(path);
    const NRStructure s = structure_from_json(doc);
    if (!full) {
      const auto rep = validate_structure(s);
      r.report = to_json(rep);
      r.code = rep.valid() ? kOk : kInvalid;
      r.summary = path + ": " + (rep.valid() ? "valid" : "invalid");
      return r;
    }
    const AnalysisReport rep = analyze(s);
    r.report = to_json(rep);
    if (!rep.valid()) {
      r.code = kInvalid;
      // Partial fixtures may carry a subspace along which they are known to split.
      if (doc.root().contains("suggested_witness")) {
        const Subspace w = subspace_from_json(doc.root()["suggested_witness"], s.space.dim(), "suggested_witness", doc);
        r.report["decomposition_along_suggested_witness"] = to_json(decompose_along(s, w));
      }
      r.summary = path + ": invalid structure";
    } else {
      r.summary = path + ": valid; flat=" + (rep.geometry->flat ? "yes" : "no") +
                  " symmetric=" + (rep.geometry->locally_symmetric ? "yes" : "no") +
                  " holonomy_dim=" + std::to_string(rep.holonomy->size()) +
                  " decomposable=" + to_string(rep.decomposition->verdict);
    }
  } catch (const Error& e) {
    r.code = e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::ShapeMismatch ? kMalformed : kInvalid;
    r.error = e.what();
  }
  return r;
}

int run_structures(const std::vector<std::string>& files, bool full, unsigned jobs, bool verbose) {
  std::vector<FileResult> results(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) results[i] = analyze_file(files[i], full);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(files.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = kOk;
  for (const auto& r : results) {
    if (!r.error.empty()) std::cerr << "error: " << r.error << "\n";
    if (verbose && !r.summary.empty()) std::cerr << r.summary << "\n";
    code = std::max(code, r.code);
  }
  if (code == kMalformed) return code;
  if (files.size() == 1) {
    std::cout << dump(results[0].report);
  } else {
    Json all = Json::object();
    for (std::size_t i = 0; i < files.size(); ++i) all[files[i]] = results[i].error.empty() ? results[i].report : Json{{"error", results[i].error}};
    std::cout << dump(all);
  }
  return code;
}

/// Parses "--name value" pairs following `catalog make <family>`.
FamilySpec family_spec(const std::string& family, const std::vector<std::string>& extras) {
  FamilySpec spec{family, {}};
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const std::string& flag = extras[i];
    if (flag.rfind("--", 0) != 0) throw Error(ErrorKind::Parse, "parameter '" + flag + "': expected --name value");
    std::string name = flag.substr(2), value;
    const auto eq = name.find('=');
    if (eq != std::string::npos) {
      value = name.substr(eq + 1);
      name = name.substr(0, eq);
    } else {
      if (i + 1 >= extras.size()) throw Error(ErrorKind::Parse, "parameter '" + name + "': missing value");
      value = extras[++i];
    }
    try {
      spec.params[name] = Rational::parse(value);
    } catch (const Error&) {
      throw Error(ErrorKind::Parse, "parameter '" + name + "': malformed rational \"" + value + "\"");
    }
  }
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of naturally reductive structures on 4-dimensional metric vector spaces"};
  app.require_subcommand(1, 1);
  bool verbose = false;
  app.add_flag("--verbose,-v", verbose, "Write a human-readable summary to stderr");

  unsigned jobs = 1;
  std::vector<std::string> validate_files, analyze_files;
  auto* validate = app.add_subcommand("validate", "Check the structural identities of NRStructure files");
  validate->add_option("files", validate_files, "NRStructure JSON files")->required()->check(CLI::ExistingFile);
  validate->add_option("--jobs,-j", jobs, "Worker threads for several files");
  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis report of NRStructure files");
  analyze_cmd->add_option("files", analyze_files, "NRStructure JSON files")->required()->check(CLI::ExistingFile);
  analyze_cmd->add_option("--jobs,-j", jobs, "Worker threads for several files");

  std::string signature, matrix_path;
  auto* classify = app.add_subcommand("classify-op", "Normal form of a skew-adjoint operator");
  classify->add_option("--signature", signature)->required()->check(CLI::IsMember({"lorentz", "neutral"}));
  classify->add_option("--matrix", matrix_path)->required()->check(CLI::ExistingFile);

  std::string op_path, family;
  auto* constraints = app.add_subcommand("constraints", "Torsion parameters preserved by an operator");
  constraints->add_option("--op", op_path)->required()->check(CLI::ExistingFile);
  constraints->add_option("--family", family)->required()->check(CLI::IsMember({"lorentz", "neutral-orthonormal", "neutral-witt"}));

  auto* catalog = app.add_subcommand("catalog", "List or instantiate catalog families");
  catalog->require_subcommand(1, 1);
  catalog->add_subcommand("list", "List the families and their parameters");
  std::string make_family_name, out_path;
  auto* make = catalog->add_subcommand("make", "Instantiate a family: make <family> --<param> <value> ... [--out file]");
  make->add_option("family", make_family_name)->required();
  make->add_option("--out,-o", out_path, "Output file (stdout when omitted)");
  make->allow_extras();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    if (*validate) return run_structures(validate_files, false, jobs, verbose);
    if (*analyze_cmd) return run_structures(analyze_files, true, jobs, verbose);
    if (*classify) {
      auto [op, metric] = load_operator(matrix_path);
      const MetricSpace space = metric ? *metric : signature == "lorentz" ? lorentz_orthonormal_metric() : neutral_orthonormal_metric();
      const auto sig = space.signature();
      const bool lorentz = sig == Signature{1, 3};
      if ((signature == "lorentz") != lorentz) throw Error(ErrorKind::WrongSignature, "metric signature does not match --signature " + signature);
      const NormalFormTag tag = signature == "lorentz" ? classify_lorentz(space, op) : classify_neutral(space, op);
      if (verbose) std::cerr << "family " << to_string(tag.family) << ", char poly " << tag.char_poly.to_string("x") << "\n";
      std::cout << dump(to_json(tag));
      return kOk;
    }
    if (*constraints) {
      const TorsionFamily f = torsion_family_from_string(family);
      auto [op, metric] = load_operator(op_path);
      const MetricSpace space = metric ? *metric : family_metric(f);
      const Subspace sol = torsion_constraints(space, op, f);
      Json out = to_json(sol);
      out["family"] = family;
      out["parameters"] = {"a", "b", "c", "d"};
      if (verbose) std::cerr << "solution space of dimension " << sol.dim() << "\n";
      std::cout << dump(out);
      return kOk;
    }
    if (*catalog) {
      if (catalog->got_subcommand("list")) {
        Json out = Json::object();
        for (const auto& name : family_names()) out[name] = Json{{"parameters", family_parameters(name)}, {"description", family_description(name)}};
        std::cout << dump(out);
        return kOk;
      }
      const FamilySpec spec = family_spec(make_family_name, make->remaining());
      const FamilyInstance inst = make_family(spec);
      if (verbose) {
        std::cerr << "built " << spec.name << (inst.partial ? " (partial fixture)" : "") << "\n";
        for (const auto& n : inst.notes) std::cerr << "note: " << n << "\n";
      }
      emit(to_json(spec, inst), out_path);
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::ParamOutOfDomain || e.kind() == ErrorKind::ShapeMismatch ? kMalformed : kInvalid;
  }
  return kOk;
}
