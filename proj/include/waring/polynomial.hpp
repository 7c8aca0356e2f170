#ifndef WARING_POLYNOMIAL_HPP
#define WARING_POLYNOMIAL_HPP

#include <waring/rational.hpp>

#include <cassert>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace waring {

namespace detail {
template <class Coeff>
bool coeff_is_zero(const Coeff& c) {
  return is_zero(c);
}
}  // namespace detail

/// Dense univariate polynomial over an exact field.
///
/// Coefficients are stored low degree first and kept trimmed, so the zero
/// polynomial has no coefficients.  A prototype zero is carried alongside
/// because field elements need to know which field they belong to.
///
/// `Coeff` must provide +, -, *, / among themselves, multiplication by a
/// Rational, equality, and a free `is_zero(const Coeff&)`.
template <class Coeff>
class Polynomial {
 public:
  explicit Polynomial(Coeff zero) : zero_(std::move(zero)) {}

  Polynomial(std::vector<Coeff> coeffs, Coeff zero)
      : coeffs_(std::move(coeffs)), zero_(std::move(zero)) {
    trim();
  }

  static Polynomial constant(Coeff c) {
    Coeff z = c - c;
    return Polynomial(std::vector<Coeff>{std::move(c)}, std::move(z));
  }

  /// c * t^k
  static Polynomial monomial(Coeff c, int k) {
    Coeff z = c - c;
    std::vector<Coeff> v(static_cast<std::size_t>(k) + 1, z);
    v.back() = std::move(c);
    return Polynomial(std::move(v), std::move(z));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  const Coeff& coeff(int i) const {
    if (i < 0 || i > degree()) return zero_;
    return coeffs_[static_cast<std::size_t>(i)];
  }
  const Coeff& leading() const {
    assert(!is_zero());
    return coeffs_.back();
  }
  std::span<const Coeff> coefficients() const { return coeffs_; }
  const Coeff& zero_coeff() const { return zero_; }

  Coeff operator()(const Coeff& x) const {
    Coeff acc = zero_;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial operator-() const {
    std::vector<Coeff> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(zero_ - c);
    return Polynomial(std::move(v), zero_);
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    std::vector<Coeff> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      v.push_back(a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i)));
    return Polynomial(std::move(v), a.zero_);
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    std::vector<Coeff> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      v.push_back(a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i)));
    return Polynomial(std::move(v), a.zero_);
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.zero_);
    std::vector<Coeff> v(a.coeffs_.size() + b.coeffs_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (detail::coeff_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v), a.zero_);
  }

  Polynomial scaled(const Coeff& c) const {
    std::vector<Coeff> v;
    v.reserve(coeffs_.size());
    for (const auto& x : coeffs_) v.push_back(x * c);
    return Polynomial(std::move(v), zero_);
  }

  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Euclidean division; throws on a zero divisor.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial r = a;
    if (a.degree() < b.degree()) return {Polynomial(a.zero_), r};
    std::vector<Coeff> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), a.zero_);
    const Coeff& lb = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      const int shift = r.degree() - b.degree();
      Coeff factor = r.leading() / lb;
      for (int i = 0; i <= b.degree(); ++i) {
        auto& slot = r.coeffs_[static_cast<std::size_t>(i + shift)];
        slot = slot - factor * b.coeffs_[static_cast<std::size_t>(i)];
      }
      // The leading term cancels exactly; drop it explicitly.
      r.coeffs_.pop_back();
      r.trim();
      q[static_cast<std::size_t>(shift)] = std::move(factor);
    }
    return {Polynomial(std::move(q), a.zero_), r};
  }

  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) {
    return divmod(a, b).second;
  }

  Polynomial derivative() const {
    std::vector<Coeff> v;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      v.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
    return Polynomial(std::move(v), zero_);
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    const Coeff lc = leading();
    std::vector<Coeff> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(c / lc);
    return Polynomial(std::move(v), zero_);
  }

  /// Polynomial with coefficients reversed: t^deg * p(1/t).
  Polynomial reversed() const {
    std::vector<Coeff> v(coeffs_.rbegin(), coeffs_.rend());
    return Polynomial(std::move(v), zero_);
  }

 private:
  void trim() {
    while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
  Coeff zero_;
};

/// Monic gcd; gcd(0, 0) is the zero polynomial.
template <class Coeff>
Polynomial<Coeff> gcd(Polynomial<Coeff> a, Polynomial<Coeff> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Bezout coefficients: returns (g, u, v) with u*a + v*b = g, g monic.
template <class Coeff>
struct ExtendedGcd {
  Polynomial<Coeff> g, u, v;
};

template <class Coeff>
ExtendedGcd<Coeff> extended_gcd(const Polynomial<Coeff>& a, const Polynomial<Coeff>& b) {
  using P = Polynomial<Coeff>;
  const Coeff& z = a.zero_coeff();
  const Coeff one = [&] {
    // one = x/x for any nonzero coefficient of a or b
    const P& src = a.is_zero() ? b : a;
    return src.leading() / src.leading();
  }();
  P r0 = a, r1 = b;
  P s0 = P::constant(one), s1(z);
  P t0(z), t1 = P::constant(one);
  while (!r1.is_zero()) {
    auto [q, r] = P::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    P s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    P t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Coeff lc = r0.leading();
  return {r0.monic(), s0.scaled(one / lc), t0.scaled(one / lc)};
}

/// Yun square-free decomposition: returns factors f_1, f_2, ... (monic) with
/// p = lc * prod f_i^i, each f_i square-free and pairwise coprime.
template <class Coeff>
std::vector<Polynomial<Coeff>> squarefree_decomposition(const Polynomial<Coeff>& p) {
  using P = Polynomial<Coeff>;
  std::vector<P> out;
  if (p.degree() < 1) return out;
  P a = p.monic();
  P b = a.derivative();
  P c = gcd(a, b);
  P w = P::divmod(a, c).first;
  P y = P::divmod(b, c).first;
  P z = y - w.derivative();
  while (w.degree() > 0) {
    P g = gcd(w, z);
    out.push_back(g);
    w = P::divmod(w, g).first;
    y = P::divmod(z, g).first;
    z = y - w.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

template <class Coeff>
bool is_squarefree(const Polynomial<Coeff>& p) {
  if (p.degree() < 1) return !p.is_zero();
  return gcd(p, p.derivative()).degree() == 0;
}

using QPoly = Polynomial<Rational>;

inline QPoly make_qpoly(std::initializer_list<long> coeffs_low_first) {
  std::vector<Rational> v;
  for (long c : coeffs_low_first) v.emplace_back(c);
  return QPoly(std::move(v), Rational(0));
}

}  // namespace waring

#endif
