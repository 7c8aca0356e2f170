#ifndef WARING_BINARY_FORM_HPP
#define WARING_BINARY_FORM_HPP

#include <waring/number_field.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace waring {

/// Homogeneous polynomial sum_j c_j x^(d-j) y^j over a number field.
///
/// The monomial coefficients c_j are canonical; the binomial view
/// a_j = c_j / C(d, j) is derived on demand.  The zero form is rejected.
/// Degree 0 (a nonzero constant) is allowed because gcds of forms produce it.
class BinaryForm {
 public:
  BinaryForm(NumberField field, std::vector<FieldElement> monomial_coeffs);

  static BinaryForm over_rationals(const std::vector<Rational>& monomial_coeffs);
  static BinaryForm from_binomial_coeffs(const std::vector<FieldElement>& a);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const NumberField& field() const { return field_; }
  std::span<const FieldElement> coefficients() const { return coeffs_; }
  /// Coefficient of x^(d-j) y^j.
  const FieldElement& coeff(int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }

  std::vector<FieldElement> binomial_coeffs() const;

  /// Multiplicity of y as a factor, i.e. of the projective root (1 : 0).
  int y_multiplicity() const;
  /// Multiplicity of x as a factor, i.e. of the projective root (0 : 1).
  int x_multiplicity() const;

  /// f(t, 1): degree d - y_multiplicity().
  KPoly dehomogenize() const;
  /// Inverse of dehomogenize for a target degree >= deg p.
  static BinaryForm homogenize(const KPoly& p, int degree);

  BinaryForm in_field(const NumberField& target) const;
  BinaryForm scaled(const FieldElement& c) const;
  /// Leading nonzero coefficient made 1.
  BinaryForm normalized() const;

  bool is_rational() const;
  std::string to_string() const;

  bool operator==(const BinaryForm& o) const;
  bool operator!=(const BinaryForm& o) const { return !(*this == o); }

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);

 private:
  NumberField field_;
  std::vector<FieldElement> coeffs_;
};

/// Point (alpha : beta) of the projective line, i.e. the linear form
/// alpha x + beta y up to scale.  Scaled so the first nonzero coordinate is 1.
class ProjectivePoint {
 public:
  ProjectivePoint(FieldElement alpha, FieldElement beta);

  const FieldElement& alpha() const { return alpha_; }
  const FieldElement& beta() const { return beta_; }
  /// beta/alpha infinite, i.e. the point (0 : 1).
  bool has_infinite_slope() const { return alpha_.is_zero(); }

  /// Coefficients of (alpha x + beta y)^d.
  std::vector<FieldElement> power(int d) const;
  /// The linear factor (-beta x + alpha y) vanishing at this point.
  BinaryForm vanishing_form() const;

  bool operator==(const ProjectivePoint& o) const {
    return alpha_ == o.alpha_ && beta_ == o.beta_;
  }

 private:
  FieldElement alpha_, beta_;
};

/// Projective root (t : 1) of a form, or (1 : 0) when t is absent.
ProjectivePoint point_from_root(const FieldElement& t);
ProjectivePoint point_at_infinity(const NumberField& field);

std::vector<FieldElement> binomial_coeffs(const BinaryForm& f);

/// h(d/dx, d/dy) f.  Returns nullopt when the result is zero, i.e. when h is
/// apolar to f.  Requires deg h <= deg f and a common field.
std::optional<BinaryForm> apolar_apply(const BinaryForm& h, const BinaryForm& f);

/// Raw coefficient vector of h(D) f (possibly all zero).
std::vector<FieldElement> apolar_coefficients(const BinaryForm& h, const BinaryForm& f);

/// Partial derivatives; nullopt when the derivative vanishes.
std::optional<BinaryForm> derivative_x(const BinaryForm& f);
std::optional<BinaryForm> derivative_y(const BinaryForm& f);

bool squarefree_test(const BinaryForm& h);

/// True iff f = c (alpha x + beta y)^d.
bool is_dth_power(const BinaryForm& f);

struct HyperbolicResult {
  bool is_hyperbolic = false;
  /// Real linear factors counted with multiplicity.
  int tau = 0;
};

/// Requires a real coefficient field; throws std::domain_error otherwise.
HyperbolicResult hyperbolic_test(const BinaryForm& f);

/// Distinct real roots via a Sturm sequence of the square-free part.
int real_distinct_root_count(const QPoly& p);
/// Same over a real field (Q or Q(sqrt d), d > 0).
int real_distinct_root_count(const KPoly& p);
/// Real roots counted with multiplicity.
int real_root_count_with_multiplicity(const KPoly& p);

/// Monic-normalized gcd of two forms (degree 0 when coprime).
BinaryForm form_gcd(const BinaryForm& a, const BinaryForm& b);

/// Exact sum of the given coefficient vectors scaled by lambdas.
std::vector<FieldElement> combine_powers(std::span<const ProjectivePoint> points,
                                         std::span<const FieldElement> lambdas, int degree);

}  // namespace waring

#endif
