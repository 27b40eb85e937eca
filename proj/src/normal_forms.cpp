#include "nrs/normal_forms.hpp"

#include <array>

#include "nrs/error.hpp"
#include "nrs/invariant_splitting.hpp"

namespace nrs {

namespace {

constexpr std::array<std::pair<NormalFamily, const char*>, 9> kFamilyNames{{
    {NormalFamily::Zero, "Zero"},
    {NormalFamily::Lor_a, "Lor_a"},
    {NormalFamily::Lor_b, "Lor_b"},
    {NormalFamily::Neu_a1, "Neu_a1"},
    {NormalFamily::Neu_a2, "Neu_a2"},
    {NormalFamily::Neu_a3, "Neu_a3"},
    {NormalFamily::Neu_b1, "Neu_b1"},
    {NormalFamily::Neu_b2, "Neu_b2"},
    {NormalFamily::Neu_b3, "Neu_b3"},
}};

/// Sign of p + q*sqrt(d), d >= 0.
int surd_sign(const Rational& p, const Rational& q, const Rational& d) {
  const int sp = p.sign();
  const int sq = d.is_zero() ? 0 : q.sign();
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  const Rational lhs = p * p;
  const Rational rhs = q * q * d;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sp : sq;
}

/// Adds `name_sq` and, when rational, its nonnegative root `name`.
void put_square(NormalFormTag& tag, const std::string& name, const Rational& sq) {
  tag.parameters[name + "_sq"] = sq;
  if (auto r = sq.exact_sqrt()) tag.parameters[name] = *r;
}

std::optional<unsigned> nilpotency(const Matrix& a) {
  Matrix p = a;
  for (unsigned k = 1; k <= a.rows(); ++k) {
    if (p.is_zero()) return k;
    p = p * a;
  }
  return std::nullopt;
}

void require(const MetricSpace& s, const Matrix& a, Signature sig, const char* what) {
  if (a.rows() != 4 || a.cols() != 4 || s.dim() != 4) throw Error(ErrorKind::ShapeMismatch, "normal forms need a 4x4 operator");
  if (s.signature() != sig) {
    throw Error(ErrorKind::WrongSignature, std::string(what) + " classification needs signature (" +
                                                std::to_string(sig.first) + "," + std::to_string(sig.second) + ")");
  }
  if (!is_skew_adjoint(s, a)) throw Error(ErrorKind::NotSkew, "operator is not skew-adjoint for the metric");
}

NormalFormTag base_tag(const MetricSpace& s, const Matrix& a) {
  NormalFormTag tag;
  tag.char_poly = characteristic_polynomial(a);
  if (a.is_zero()) {
    tag.family = NormalFamily::Zero;
    tag.reducible = true;
    return tag;
  }
  tag.nilpotency_index = nilpotency(a);
  tag.reducible = has_invariant_splitting(s, {a});
  return tag;
}

}  // namespace

const char* to_string(NormalFamily f) {
  for (const auto& [fam, name] : kFamilyNames)
    if (fam == f) return name;
  return "Unknown";
}

NormalFamily normal_family_from_string(const std::string& name) {
  for (const auto& [fam, n] : kFamilyNames)
    if (name == n) return fam;
  throw Error(ErrorKind::Parse, "unknown normal-form family \"" + name + "\"");
}

ConjugationInvariants conjugation_invariants(const Matrix& a) {
  ConjugationInvariants inv;
  inv.char_poly = characteristic_polynomial(a);
  inv.min_poly = minimal_polynomial(a);
  Matrix p = a;
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    inv.power_ranks.push_back(rank(p));
    p = p * a;
  }
  return inv;
}

NormalFormTag classify_lorentz(const MetricSpace& s, const Matrix& a) {
  require(s, a, {1, 3}, "Lorentzian");
  NormalFormTag tag = base_tag(s, a);
  if (tag.family == NormalFamily::Zero && a.is_zero()) return tag;
  if (tag.nilpotency_index) {
    if (*tag.nilpotency_index != 3) {
      throw Error(ErrorKind::Unclassifiable, "nilpotent skew operator in signature (1,3) must have index 3");
    }
    tag.family = NormalFamily::Lor_a;
    return tag;
  }
  // u^2 + c2 u + c0 with roots alpha^2 >= 0 and -beta^2 <= 0.
  const Rational c2 = tag.char_poly.coeff(2), c0 = tag.char_poly.coeff(0);
  const Rational disc = c2 * c2 - Rational(4) * c0;
  tag.family = NormalFamily::Lor_b;
  if (auto root = disc.exact_sqrt()) {
    put_square(tag, "alpha", (-c2 + *root) / Rational(2));
    put_square(tag, "beta", (c2 + *root) / Rational(2));
  } else {
    tag.parameters["u_c2"] = c2;
    tag.parameters["u_c0"] = c0;
  }
  return tag;
}

NormalFormTag classify_neutral(const MetricSpace& s, const Matrix& a) {
  require(s, a, {2, 2}, "neutral");
  NormalFormTag tag = base_tag(s, a);
  if (a.is_zero()) return tag;
  if (tag.nilpotency_index) {
    if (*tag.nilpotency_index == 3) {
      tag.family = NormalFamily::Neu_a1;
    } else if (*tag.nilpotency_index == 2) {
      tag.family = NormalFamily::Neu_b1;
      tag.parameters["nu_sq"] = 0;
      tag.parameters["nu"] = 0;
      tag.note = "boundary nu=0: nilpotent of index 2, distinct from the index-3 family Neu_a1";
    } else {
      throw Error(ErrorKind::Unclassifiable, "unexpected nilpotency index");
    }
    return tag;
  }

  const Rational c2 = tag.char_poly.coeff(2), c0 = tag.char_poly.coeff(0);
  const Rational disc = c2 * c2 - Rational(4) * c0;
  const bool semisimple = is_squarefree(minimal_polynomial(a));

  if (disc.sign() < 0) {
    tag.family = NormalFamily::Neu_b3;
    // c2 = 2(nu^2 - xi^2), c0 = (xi^2 + nu^2)^2
    if (auto root = c0.exact_sqrt()) {
      put_square(tag, "xi", (*root - c2 / Rational(2)) / Rational(2));
      put_square(tag, "nu", (*root + c2 / Rational(2)) / Rational(2));
    } else {
      tag.parameters["u_c2"] = c2;
      tag.parameters["u_c0"] = c0;
    }
    return tag;
  }

  if (disc.is_zero()) {
    const Rational r = -c2 / Rational(2);
    if (r.sign() < 0) {
      if (semisimple) {
        tag.family = NormalFamily::Neu_a2;
        put_square(tag, "alpha", -r);
        put_square(tag, "beta", -r);
      } else {
        tag.family = NormalFamily::Neu_b1;
        put_square(tag, "nu", -r);
      }
    } else {
      if (semisimple) {
        tag.family = NormalFamily::Neu_a3;
        put_square(tag, "alpha", r);
        put_square(tag, "beta", r);
      } else {
        tag.family = NormalFamily::Neu_b2;
        put_square(tag, "lambda", r);
      }
    }
    return tag;
  }

  if (!semisimple) throw Error(ErrorKind::Unclassifiable, "distinct u-roots with a non-semisimple operator");
  if (c0.sign() < 0) throw Error(ErrorKind::Unclassifiable, "u-roots of opposite sign cannot occur in signature (2,2)");
  const auto root = disc.exact_sqrt();
  if (c2.sign() >= 0) {
    // Both u-roots <= 0: two rotation planes. alpha belongs to the negative-definite plane.
    // The larger root r1 = (-c2 + sqrt(disc))/2; its eigenplane is the image of A^2 - r2 I,
    // whose metric sign is read off <(A^2 - r2) v, v> for any v outside the other plane.
    tag.family = NormalFamily::Neu_a2;
    const Matrix a2 = a * a;
    int plane_sign = 0;
    for (std::size_t i = 0; i < 4 && plane_sign == 0; ++i) {
      const Vector v = unit_vector(4, i);
      const Rational p = s.inner(a2 * v, v) + s.inner(v, v) * c2 / Rational(2);
      const Rational q = s.inner(v, v) / Rational(2);
      plane_sign = surd_sign(p, q, disc);
    }
    const bool larger_is_alpha = plane_sign < 0;
    if (root) {
      const Rational r1 = (-c2 + *root) / Rational(2), r2 = (-c2 - *root) / Rational(2);
      put_square(tag, "alpha", larger_is_alpha ? -r1 : -r2);
      put_square(tag, "beta", larger_is_alpha ? -r2 : -r1);
    } else {
      tag.parameters["u_c2"] = c2;
      tag.parameters["u_c0"] = c0;
      tag.parameters["alpha_sq_is_smaller"] = larger_is_alpha ? 1 : 0;
    }
  } else {
    // Both u-roots >= 0: two boost planes, interchangeable by an isometry; sort alpha >= beta.
    tag.family = NormalFamily::Neu_a3;
    if (root) {
      put_square(tag, "alpha", (-c2 + *root) / Rational(2));
      put_square(tag, "beta", (-c2 - *root) / Rational(2));
    } else {
      tag.parameters["u_c2"] = c2;
      tag.parameters["u_c0"] = c0;
    }
  }
  return tag;
}

NormalFormTag classify_operator(const MetricSpace& s, const Matrix& a) {
  if (s.signature() == Signature{1, 3}) return classify_lorentz(s, a);
  if (s.signature() == Signature{2, 2}) return classify_neutral(s, a);
  throw Error(ErrorKind::WrongSignature, "normal forms are defined for signatures (1,3) and (2,2)");
}

}  // namespace nrs
