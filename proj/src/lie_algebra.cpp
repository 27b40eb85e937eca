#include "nrs/lie_algebra.hpp"

#include <algorithm>

#include "nrs/error.hpp"

namespace nrs {

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)), table_(dim * dim, Vector(dim)) {
  if (labels_.empty()) {
    for (std::size_t i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i + 1));
  }
  if (labels_.size() != dim) throw Error(ErrorKind::ShapeMismatch, "label count differs from dimension");
}

std::size_t LieAlgebra::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorKind::ShapeMismatch, "no basis element named " + label);
  return static_cast<std::size_t>(it - labels_.begin());
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& v) {
  if (i >= dim_ || j >= dim_ || v.size() != dim_) throw Error(ErrorKind::ShapeMismatch, "bracket index out of range");
  if (i == j) {
    if (!is_zero(v)) throw Error(ErrorKind::ShapeMismatch, "[e_i, e_i] must vanish");
    return;
  }
  table_[i * dim_ + j] = v;
  table_[j * dim_ + i] = Rational(-1) * v;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero() || i == j) continue;
      const Rational f = x[i] * y[j];
      const Vector& b = bracket(i, j);
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!b[k].is_zero()) out[k] += f * b[k];
      }
    }
  }
  return out;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, bracket(x, unit_vector(dim_, j)));
  return m;
}

JacobiResult jacobi_check(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        const Vector sum = g.bracket(ei, g.bracket(ej, ek)) + g.bracket(ej, g.bracket(ek, ei)) +
                           g.bracket(ek, g.bracket(ei, ej));
        if (!is_zero(sum)) return {false, std::array<std::size_t, 3>{i, j, k}};
      }
    }
  }
  return {};
}

LieAlgebra change_basis(const LieAlgebra& g, const Matrix& p, std::vector<std::string> labels) {
  const std::size_t n = g.dim();
  if (p.rows() != n || p.cols() != n) throw Error(ErrorKind::Singular, "basis change must be square of the algebra's dimension");
  const Matrix pinv = inverse(p);
  LieAlgebra out(n, labels.empty() ? g.labels() : std::move(labels));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out.set_bracket(i, j, pinv * g.bracket(p.column(i), p.column(j)));
    }
  }
  return out;
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<Vector> out;
  for (const auto& u : a.vectors())
    for (const auto& v : b.vectors()) out.push_back(g.bracket(u, v));
  return Subspace::span(out, g.dim());
}

std::vector<std::size_t> derived_series(const LieAlgebra& g) {
  Subspace cur = Subspace::full(g.dim());
  std::vector<std::size_t> dims{cur.dim()};
  while (cur.dim() > 0) {
    Subspace next = bracket_span(g, cur, cur);
    if (next.dim() == cur.dim()) break;
    cur = std::move(next);
    dims.push_back(cur.dim());
  }
  return dims;
}

namespace {

/// Lower central series of the subalgebra s: s, [s,s], [s,[s,s]], ...
std::vector<Subspace> lower_central(const LieAlgebra& g, const Subspace& s) {
  std::vector<Subspace> series{s};
  while (series.back().dim() > 0) {
    Subspace next = bracket_span(g, s, series.back());
    if (next.dim() == series.back().dim()) break;
    series.push_back(std::move(next));
  }
  return series;
}

}  // namespace

std::vector<std::size_t> lower_central_series(const LieAlgebra& g) {
  std::vector<std::size_t> dims;
  for (const auto& s : lower_central(g, Subspace::full(g.dim()))) dims.push_back(s.dim());
  return dims;
}

bool is_solvable(const LieAlgebra& g) { return derived_series(g).back() == 0; }
bool is_nilpotent(const LieAlgebra& g) { return lower_central_series(g).back() == 0; }

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) { return s.contains(bracket_span(g, s, s)); }

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  return s.contains(bracket_span(g, Subspace::full(g.dim()), s));
}

bool is_abelian(const LieAlgebra& g, const Subspace& s) { return bracket_span(g, s, s).dim() == 0; }

bool is_nilpotent_ideal(const LieAlgebra& g, const Subspace& candidate) {
  if (candidate.dim() == 0) return true;
  if (!is_ideal(g, candidate)) return false;
  return lower_central(g, candidate).back().dim() == 0;
}

Subspace ideal_generated(const LieAlgebra& g, const std::vector<Vector>& generators) {
  Subspace cur = Subspace::span(generators, g.dim());
  const Subspace all = Subspace::full(g.dim());
  while (true) {
    Subspace next = cur + bracket_span(g, all, cur);
    if (next.dim() == cur.dim()) return cur;
    cur = std::move(next);
  }
}

std::vector<Subspace> nilpotent_ideal_search(const LieAlgebra& g, std::size_t max_subset) {
  const std::size_t n = g.dim();
  std::vector<Vector> pool;
  for (std::size_t i = 0; i < n; ++i) pool.push_back(unit_vector(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!is_zero(g.bracket(i, j))) pool.push_back(g.bracket(i, j));

  std::vector<Subspace> found;
  auto consider = [&](const std::vector<Vector>& gens) {
    Subspace ideal = ideal_generated(g, gens);
    if (std::find(found.begin(), found.end(), ideal) != found.end()) return;
    if (is_nilpotent_ideal(g, ideal)) found.push_back(std::move(ideal));
  };
  // Enumerate subsets of size 1..max_subset by index combinations.
  std::vector<std::size_t> idx;
  for (std::size_t size = 1; size <= max_subset && size <= pool.size(); ++size) {
    idx.resize(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<Vector> gens;
      for (auto i : idx) gens.push_back(pool[i]);
      consider(gens);
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == pool.size() - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  std::stable_sort(found.begin(), found.end(), [](const Subspace& a, const Subspace& b) { return a.dim() > b.dim(); });
  return found;
}

bool match_brackets(const LieAlgebra& g, const LieAlgebra& pattern, const Matrix& map) {
  if (pattern.dim() != g.dim()) return false;
  return change_basis(g, map) == pattern;
}

}  // namespace nrs
