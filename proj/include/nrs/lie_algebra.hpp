#ifndef NRS_LIE_ALGEBRA_HPP
#define NRS_LIE_ALGEBRA_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nrs/matrix.hpp"
#include "nrs/metric_space.hpp"

namespace nrs {

/// Finite-dimensional Lie algebra given by structure constants: [e_i, e_j] = sum_k c^k_ij e_k.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Abelian algebra; empty labels default to e1..en.
  explicit LieAlgebra(std::size_t dim, std::vector<std::string> labels = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t index_of(const std::string& label) const;

  /// Sets [e_i, e_j] = v and [e_j, e_i] = -v. Throws ShapeMismatch for i == j with v != 0.
  void set_bracket(std::size_t i, std::size_t j, const Vector& v);
  const Vector& bracket(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of ad(x) in the basis.
  Matrix ad(const Vector& x) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Vector> table_;
};

struct JacobiResult {
  bool holds = true;
  /// First basis triple (i, j, k) with nonzero cyclic sum.
  std::optional<std::array<std::size_t, 3>> failing_triple;
};

JacobiResult jacobi_check(const LieAlgebra& g);

/// New basis e'_i = sum_j p(j, i) e_j (columns of p are the new basis vectors). Throws Singular.
LieAlgebra change_basis(const LieAlgebra& g, const Matrix& p, std::vector<std::string> labels = {});

/// span{[u, v] : u in a, v in b}
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);
/// Dimensions g, [g,g], [[g,g],[g,g]], ... until stable.
std::vector<std::size_t> derived_series(const LieAlgebra& g);
/// Dimensions g, [g,g], [g,[g,g]], ... until stable.
std::vector<std::size_t> lower_central_series(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);

bool is_subalgebra(const LieAlgebra& g, const Subspace& s);
bool is_ideal(const LieAlgebra& g, const Subspace& s);
/// [s, s] = 0
bool is_abelian(const LieAlgebra& g, const Subspace& s);
/// s is an ideal and nilpotent as a Lie algebra.
bool is_nilpotent_ideal(const LieAlgebra& g, const Subspace& candidate);
/// Smallest ideal containing the given vectors.
Subspace ideal_generated(const LieAlgebra& g, const std::vector<Vector>& generators);

/// Nilpotent ideals generated by subsets (up to max_subset elements) of the distinguished spanning
/// set {e_i} u {[e_i, e_j]}; distinct, sorted by decreasing dimension. The sum of nilpotent ideals is
/// nilpotent, so the first entry's dimension bounds the nilradical found by this search.
std::vector<Subspace> nilpotent_ideal_search(const LieAlgebra& g, std::size_t max_subset = 2);

/// change_basis(g, map) has exactly the pattern's structure constants. Throws Singular.
bool match_brackets(const LieAlgebra& g, const LieAlgebra& pattern, const Matrix& map);

/// g = h + m with a metric on m.
struct ReductiveSplit {
  LieAlgebra algebra;
  std::vector<std::size_t> m_indices;
  std::vector<std::size_t> h_indices;
  MetricSpace metric_on_m;
};

}  // namespace nrs

#endif
