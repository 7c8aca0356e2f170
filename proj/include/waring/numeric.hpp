#ifndef WARING_NUMERIC_HPP
#define WARING_NUMERIC_HPP

// Floating-point helpers used to *find* candidates; every decision that
// matters is re-checked with exact arithmetic by the callers.

#include <waring/number_field.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <span>
#include <vector>

namespace waring {

using BigReal = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<640, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

/// Maximum precision (bits) a BigReal computation can honour.
inline constexpr int kMaxPrecisionBits = 600;

/// Minimal complex number over an arbitrary real type.
template <class T>
struct Cx {
  T re{}, im{};

  Cx() = default;
  Cx(T r, T i = T(0)) : re(std::move(r)), im(std::move(i)) {}

  friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
  friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
  friend Cx operator*(const Cx& a, const Cx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cx operator*(const Cx& a, const T& s) { return {a.re * s, a.im * s}; }
  friend Cx operator/(const Cx& a, const Cx& b) {
    const T d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  Cx operator-() const { return {-re, -im}; }
  Cx conj() const { return {re, -im}; }
  T norm() const { return re * re + im * im; }
  T abs() const {
    using std::sqrt;
    return sqrt(norm());
  }
};

using BigComplex = Cx<BigReal>;

struct ComplexInterval {
  BigComplex center;
  BigReal radius;
};

template <class T>
T to_real(const Rational& q);
template <>
double to_real<double>(const Rational& q);
template <>
BigReal to_real<BigReal>(const Rational& q);

/// Images of the field generator under every complex embedding, index 0
/// being the designated one (see NumberField::embedding_labels).
template <class T>
std::vector<Cx<T>> generator_images(const NumberField& field);

/// Value of `a` under embedding `index`, with generator images supplied.
template <class T>
Cx<T> embed_with(const FieldElement& a, const Cx<T>& generator_image);

/// Designated complex value of `a`, accurate to 2^-precision_bits.
ComplexInterval embed(const FieldElement& a, int precision_bits);

template <class T>
struct AberthResult {
  std::vector<Cx<T>> roots;
  /// Inclusion radii: the disc around roots[k] contains a root of p.
  std::vector<T> radii;
  /// Discs pairwise disjoint, so each holds exactly one simple root.
  bool isolated = false;
  bool converged = false;
};

/// Simultaneous root iteration (Aberth-Ehrlich) on complex coefficients given
/// low degree first.  `start` may supply initial approximations.
template <class T>
AberthResult<T> aberth(std::span<const Cx<T>> coeffs, std::span<const Cx<T>> start,
                       const T& tolerance, int max_iterations);

/// Coefficients of p under embedding `index`.
template <class T>
std::vector<Cx<T>> embed_polynomial(const KPoly& p, const Cx<T>& generator_image);

/// Certified complex roots of p (under the designated embedding, or the one
/// selected by `embedding_index`) with radius <= 2^(-precision/2).  The
/// precision is doubled once on failure; throws std::runtime_error if the
/// roots still cannot be isolated.
std::vector<ComplexInterval> complex_roots_numeric(const KPoly& p, int precision_bits,
                                                   int embedding_index = 0);

}  // namespace waring

#endif
