#ifndef WARING_ROOTS_HPP
#define WARING_ROOTS_HPP

#include <waring/binary_form.hpp>
#include <waring/number_field.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace waring {

struct ComplexInterval;

struct RootOptions {
  enum class Method { Auto, Numeric };
  Method method = Method::Auto;
  int precision_bits = 256;
  /// Leaves of the conjugate-matching search before giving up (complete = false).
  std::uint64_t max_combinations = 50'000'000;
  /// Stop as soon as some root is certainly outside the field.
  bool stop_on_missing = false;
};

/// Roots of a dehomogenized binary form that lie in a number field.
struct RootFinding {
  KPoly polynomial;
  std::vector<FieldElement> roots_in_field;
  /// y divides the form, i.e. (1 : 0) is a root.
  bool point_at_infinity = false;
  /// Every root was either found or certified to lie outside the field.
  bool complete = false;
  /// Some root was certified to lie outside the field (the search may have
  /// stopped there, leaving complete false).
  bool missing_certified = false;
  int form_degree = 0;

  int found() const { return static_cast<int>(roots_in_field.size()) + (point_at_infinity ? 1 : 0); }
  bool splits() const { return found() == form_degree; }
  /// Non-splitting is proven, not just unobserved.
  bool certainly_not_split() const { return !splits() && (complete || missing_certified); }
};

/// Every root in K of a monic-normalizable p has coordinates in (1/D) Z with
/// D = delta * f_K, where delta clears the denominators of p / lc(p) and f_K
/// is NumberField::integrality_denominator().
Integer root_denominator_bound(const KPoly& p);

/// Roots of a square-free polynomial in its coefficient field.  Throws
/// std::invalid_argument when p is not square-free.
RootFinding polynomial_roots_in_field(const KPoly& p, const RootOptions& options = {});

/// Roots in K of a square-free form h (coefficients lifted into K first).
RootFinding roots_in_field(const BinaryForm& h, const NumberField& k, const RootOptions& options = {});

/// The element of K whose designated embedding is rho and which is a root of
/// p, if any.  Never a false positive: the candidate is checked exactly.
std::optional<FieldElement> recognize_in_field(const ComplexInterval& rho, const KPoly& p,
                                               const Integer& denominator_bound, int precision_bits = 256);

/// Exact square root in the field of a, when one exists.  The bool is false
/// when the search was cut short.
std::pair<std::optional<FieldElement>, bool> sqrt_in_field(const FieldElement& a);

/// Does p (square-free) have at least one root in its coefficient field?
/// nullopt when undecided within the combination budget.
std::optional<bool> has_root_in_field(const KPoly& p, const RootOptions& options = {});

}  // namespace waring

#endif
