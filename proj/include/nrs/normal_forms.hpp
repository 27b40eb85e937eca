#ifndef NRS_NORMAL_FORMS_HPP
#define NRS_NORMAL_FORMS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nrs/matrix.hpp"
#include "nrs/metric_space.hpp"
#include "nrs/polynomial.hpp"

namespace nrs {

enum class NormalFamily { Zero, Lor_a, Lor_b, Neu_a1, Neu_a2, Neu_a3, Neu_b1, Neu_b2, Neu_b3 };

const char* to_string(NormalFamily f);
NormalFamily normal_family_from_string(const std::string& name);

/// Conjugation-invariant description of a skew-adjoint operator in dimension 4.
struct NormalFormTag {
  NormalFamily family = NormalFamily::Zero;
  /// Squared parameters ("alpha_sq", "nu_sq", ...), plus the nonnegative root ("alpha", ...)
  /// whenever it is rational. When a square cannot be separated rationally the u-polynomial
  /// coefficients ("u_c2", "u_c0") are stored instead.
  std::map<std::string, Rational> parameters;
  Polynomial char_poly;
  std::optional<unsigned> nilpotency_index;
  /// Whether a proper nondegenerate invariant subspace exists.
  bool reducible = false;
  /// Set on boundary members of a family whose invariants differ from the generic member.
  std::optional<std::string> note;

  friend bool operator==(const NormalFormTag& a, const NormalFormTag& b) {
    return a.family == b.family && a.parameters == b.parameters && a.char_poly == b.char_poly &&
           a.nilpotency_index == b.nilpotency_index && a.reducible == b.reducible && a.note == b.note;
  }
};

struct ConjugationInvariants {
  Polynomial char_poly;
  Polynomial min_poly;
  /// ranks of a^1 .. a^n
  std::vector<std::size_t> power_ranks;
};

ConjugationInvariants conjugation_invariants(const Matrix& a);

/// Signature (1,3). Throws NotSkew, WrongSignature.
NormalFormTag classify_lorentz(const MetricSpace& s, const Matrix& a);
/// Signature (2,2). Throws NotSkew, WrongSignature, Unclassifiable.
NormalFormTag classify_neutral(const MetricSpace& s, const Matrix& a);
/// Dispatches on the signature of s.
NormalFormTag classify_operator(const MetricSpace& s, const Matrix& a);

}  // namespace nrs

#endif
