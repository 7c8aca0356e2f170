#ifndef WARING_NUMBER_FIELD_HPP
#define WARING_NUMBER_FIELD_HPP

#include <waring/polynomial.hpp>
#include <waring/rational.hpp>

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace waring {

class FieldElement;

/// A subfield of C presented as Q[t]/(m(t)) together with a designated
/// complex root of m, or one of the sentinel closures R and C.
///
/// Handles are cheap to copy and compare; two handles are equal when they
/// present the same field in the same way (kind and parameter).
class NumberField {
 public:
  enum class Kind { Rationals, Cyclotomic, Quadratic, RealClosure, ComplexClosure };

  static NumberField rationals();
  /// Q(zeta_n) with zeta_n = exp(2 pi i / n); n = 1, 2 give degree-1 fields.
  static NumberField cyclotomic(long n);
  /// Q(sqrt d) for square-free d not in {0, 1}.
  static NumberField quadratic(long d);
  static NumberField real_closure();
  static NumberField complex_closure();

  Kind kind() const;
  /// n for Cyclotomic, d for Quadratic, 0 otherwise.
  long parameter() const;
  int degree() const;
  const QPoly& minimal_polynomial() const;

  bool is_closure() const {
    return kind() == Kind::RealClosure || kind() == Kind::ComplexClosure;
  }
  /// True when the designated embedding lands in R.
  bool is_real() const;

  /// Canonical field spec: Q, Q(i), Q(zeta5), Q(sqrt-7), R, C.
  std::string spec() const;
  /// Name used for the generator when printing elements.
  std::string generator_symbol() const;

  /// Every algebraic integer of the field lies in (1/f) Z[t]; f = 1 for Q and
  /// cyclotomic fields (whose ring of integers is Z[zeta]) and f = 2 for
  /// quadratic ones.
  long integrality_denominator() const;

  /// Exponents j of the embeddings zeta -> zeta^j (cyclotomic), or signs +1/-1
  /// of the quadratic root; index 0 is the designated embedding.
  std::vector<long> embedding_labels() const;
  /// For each embedding index, the index of its complex conjugate.
  std::vector<int> conjugate_embedding() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement generator() const;
  FieldElement from_rational(const Rational& q) const;
  FieldElement element(std::vector<Rational> coords) const;

  bool operator==(const NumberField& o) const;
  bool operator!=(const NumberField& o) const { return !(*this == o); }

  /// Same minimal polynomial, hence canonically isomorphic via t -> t
  /// (e.g. Q(i) and Q(zeta4)).
  bool same_presentation(const NumberField& o) const;

  struct Impl;
  const Impl& impl() const { return *impl_; }

 private:
  explicit NumberField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Element of a number field, stored as its dense coordinate vector in the
/// power basis 1, t, ..., t^(deg-1).
class FieldElement {
 public:
  FieldElement(NumberField field, std::vector<Rational> coords);

  const NumberField& field() const { return field_; }
  std::span<const Rational> coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Throws std::domain_error unless is_rational().
  Rational rational_value() const;

  FieldElement inverse() const;
  FieldElement pow(long e) const;
  /// Exact sign under the designated real embedding; the field must be real.
  int real_sign() const;

  /// Reinterpret in a field with the same presentation, or lift a rational
  /// element into any field.  Throws std::invalid_argument otherwise.
  FieldElement in_field(const NumberField& target) const;

  /// Denominator lcm of the coordinates.
  Integer common_denominator() const;

  std::string to_string() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const Rational& q);
  friend FieldElement operator*(const Rational& q, const FieldElement& a) { return a * q; }

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  NumberField field_;
  std::vector<Rational> coords_;
};

inline bool is_zero(const FieldElement& a) { return a.is_zero(); }

using KPoly = Polynomial<FieldElement>;

/// Coefficients embedded into the field: p(t) with rational coefficients.
KPoly lift_polynomial(const QPoly& p, const NumberField& field);

long euler_phi(long n);
/// Phi_n via t^n - 1 = prod_{d | n} Phi_d.
QPoly cyclotomic_polynomial(long n);
bool is_squarefree_integer(long n);

/// zeta_m in Q(zeta_n) iff m | n, or n odd and m | 2n.
bool cyclotomic_member(long m, long n);

}  // namespace waring

#endif
