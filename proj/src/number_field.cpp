#include <waring/number_field.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace waring {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    return std::all_of(part.begin() + static_cast<long>(i), part.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num, true) || !valid(den, false))
    throw std::invalid_argument("not a rational number: '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const Integer& n = q.get_num();
  const Integer& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  Integer rn = sqrt(n), rd = sqrt(d);
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

long euler_phi(long n) {
  if (n < 1) throw std::invalid_argument("euler_phi requires n >= 1");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

bool is_squarefree_integer(long n) {
  if (n == 0) return false;
  long m = n < 0 ? -n : n;
  for (long p = 2; p * p <= m; ++p)
    if (m % (p * p) == 0) return false;
  return true;
}

QPoly cyclotomic_polynomial(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic polynomial needs n >= 1");
  static std::mutex mu;
  static std::map<long, QPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  QPoly p = QPoly::monomial(Rational(1), static_cast<int>(n)) - QPoly::constant(Rational(1));
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = QPoly::divmod(p, cyclotomic_polynomial(d));
    if (!r.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
    p = std::move(q);
  }
  std::lock_guard lock(mu);
  cache.emplace(n, p);
  return p;
}

bool cyclotomic_member(long m, long n) {
  if (m < 1 || n < 1) throw std::invalid_argument("cyclotomic_member requires m, n >= 1");
  if (n % m == 0) return true;
  return n % 2 == 1 && (2 * n) % m == 0;
}

// ---------------------------------------------------------------------------

struct NumberField::Impl {
  Kind kind;
  long param = 0;
  QPoly minpoly{Rational(0)};
  int degree = 0;
  // reduce[k] = coordinates of t^(degree + k) modulo the minimal polynomial
  std::vector<std::vector<Rational>> reduce;
};

namespace {

std::shared_ptr<const NumberField::Impl> build(NumberField::Kind kind, long param, QPoly minpoly) {
  auto impl = std::make_shared<NumberField::Impl>();
  impl->kind = kind;
  impl->param = param;
  impl->degree = std::max(minpoly.degree(), 0);
  impl->minpoly = std::move(minpoly);
  const int n = impl->degree;
  if (n > 0) {
    // t^n = -(m_0 + m_1 t + ... + m_{n-1} t^{n-1}) for monic m
    std::vector<Rational> cur(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cur[static_cast<std::size_t>(i)] = -impl->minpoly.coeff(i);
    for (int k = 0; k + 1 < n; ++k) {
      impl->reduce.push_back(cur);
      // multiply by t
      std::vector<Rational> next(static_cast<std::size_t>(n));
      const Rational top = cur[static_cast<std::size_t>(n - 1)];
      for (int i = n - 1; i > 0; --i) next[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
      next[0] = 0;
      for (int i = 0; i < n; ++i)
        next[static_cast<std::size_t>(i)] -= top * impl->minpoly.coeff(i);
      cur = std::move(next);
    }
  }
  return impl;
}

template <class Key>
NumberField cached(std::map<Key, NumberField>& cache, std::mutex& mu, const Key& key,
                   auto&& make) {
  std::lock_guard lock(mu);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  NumberField f = make();
  cache.emplace(key, f);
  return f;
}

}  // namespace

NumberField NumberField::rationals() {
  static const NumberField q(build(Kind::Rationals, 0, make_qpoly({0, 1})));
  return q;
}

NumberField NumberField::cyclotomic(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic field needs n >= 1");
  static std::mutex mu;
  static std::map<long, NumberField> cache;
  return cached(cache, mu, n, [n] {
    return NumberField(build(Kind::Cyclotomic, n, cyclotomic_polynomial(n)));
  });
}

NumberField NumberField::quadratic(long d) {
  if (d == 0 || d == 1) throw std::invalid_argument("quadratic field needs d not in {0, 1}");
  if (!is_squarefree_integer(d))
    throw std::invalid_argument("quadratic field needs square-free d, got " + std::to_string(d));
  static std::mutex mu;
  static std::map<long, NumberField> cache;
  return cached(cache, mu, d, [d] {
    return NumberField(build(Kind::Quadratic, d, make_qpoly({-d, 0, 1})));
  });
}

NumberField NumberField::real_closure() {
  static const NumberField r(build(Kind::RealClosure, 0, QPoly(Rational(0))));
  return r;
}

NumberField NumberField::complex_closure() {
  static const NumberField c(build(Kind::ComplexClosure, 0, QPoly(Rational(0))));
  return c;
}

NumberField::Kind NumberField::kind() const { return impl_->kind; }
long NumberField::parameter() const { return impl_->param; }
int NumberField::degree() const { return impl_->degree; }
const QPoly& NumberField::minimal_polynomial() const { return impl_->minpoly; }

bool NumberField::is_real() const {
  switch (kind()) {
    case Kind::Rationals:
    case Kind::RealClosure:
      return true;
    case Kind::Cyclotomic:
      return parameter() <= 2;
    case Kind::Quadratic:
      return parameter() > 0;
    case Kind::ComplexClosure:
      return false;
  }
  return false;
}

std::string NumberField::spec() const {
  switch (kind()) {
    case Kind::Rationals: return "Q";
    case Kind::Cyclotomic: return "Q(zeta" + std::to_string(parameter()) + ")";
    case Kind::Quadratic:
      return parameter() == -1 ? "Q(i)" : "Q(sqrt" + std::to_string(parameter()) + ")";
    case Kind::RealClosure: return "R";
    case Kind::ComplexClosure: return "C";
  }
  return "?";
}

std::string NumberField::generator_symbol() const {
  switch (kind()) {
    case Kind::Cyclotomic: return "zeta" + std::to_string(parameter());
    case Kind::Quadratic:
      return parameter() == -1 ? "i" : "sqrt(" + std::to_string(parameter()) + ")";
    default: return "t";
  }
}

long NumberField::integrality_denominator() const {
  return kind() == Kind::Quadratic ? 2 : 1;
}

std::vector<long> NumberField::embedding_labels() const {
  std::vector<long> out;
  switch (kind()) {
    case Kind::Cyclotomic: {
      const long n = parameter();
      for (long j = 1; j <= std::max(n, 1L); ++j)
        if (std::gcd(j, n) == 1) out.push_back(j);
      break;
    }
    case Kind::Quadratic:
      out = {1, -1};
      break;
    case Kind::Rationals:
      out = {1};
      break;
    default:
      break;
  }
  return out;
}

std::vector<int> NumberField::conjugate_embedding() const {
  const auto labels = embedding_labels();
  std::vector<int> out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) out[i] = static_cast<int>(i);
  if (kind() == Kind::Cyclotomic && parameter() > 2) {
    // zeta -> zeta^j is conjugate to zeta -> zeta^(n-j); labels are sorted
    for (std::size_t i = 0; i < labels.size(); ++i) out[i] = static_cast<int>(labels.size() - 1 - i);
  } else if (kind() == Kind::Quadratic && parameter() < 0) {
    out = {1, 0};
  }
  return out;
}

FieldElement NumberField::zero() const {
  if (is_closure()) throw std::domain_error("no element arithmetic in " + spec());
  return FieldElement(*this, std::vector<Rational>(static_cast<std::size_t>(degree())));
}

FieldElement NumberField::one() const {
  auto z = zero();
  std::vector<Rational> c(z.coords().begin(), z.coords().end());
  c[0] = 1;
  return FieldElement(*this, std::move(c));
}

FieldElement NumberField::generator() const {
  if (degree() == 1) {
    // t reduced modulo the linear minimal polynomial t - root
    return from_rational(-minimal_polynomial().coeff(0));
  }
  std::vector<Rational> c(static_cast<std::size_t>(degree()));
  c[1] = 1;
  return FieldElement(*this, std::move(c));
}

FieldElement NumberField::from_rational(const Rational& q) const {
  auto e = zero();
  std::vector<Rational> c(e.coords().begin(), e.coords().end());
  c[0] = q;
  return FieldElement(*this, std::move(c));
}

FieldElement NumberField::element(std::vector<Rational> coords) const {
  return FieldElement(*this, std::move(coords));
}

bool NumberField::operator==(const NumberField& o) const {
  return impl_ == o.impl_ || (kind() == o.kind() && parameter() == o.parameter());
}

bool NumberField::same_presentation(const NumberField& o) const {
  if (is_closure() || o.is_closure()) return *this == o;
  return minimal_polynomial() == o.minimal_polynomial();
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(NumberField field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (field_.is_closure()) throw std::domain_error("no element arithmetic in " + field_.spec());
  if (static_cast<int>(coords_.size()) != field_.degree())
    throw std::invalid_argument("coordinate vector length does not match field degree");
  for (auto& q : coords_) q.canonicalize();
}

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool FieldElement::is_one() const {
  if (coords_[0] != 1) return false;
  return std::all_of(coords_.begin() + 1, coords_.end(),
                     [](const Rational& q) { return sgn(q) == 0; });
}

bool FieldElement::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(),
                     [](const Rational& q) { return sgn(q) == 0; });
}

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw std::domain_error("element is not rational: " + to_string());
  return coords_[0];
}

Integer FieldElement::common_denominator() const {
  Integer l = 1;
  for (const auto& q : coords_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

namespace {

void require_same(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field())
    throw std::invalid_argument("field mismatch: " + a.field().spec() + " vs " + b.field().spec());
}

QPoly as_qpoly(std::span<const Rational> c) {
  return QPoly(std::vector<Rational>(c.begin(), c.end()), Rational(0));
}

}  // namespace

FieldElement FieldElement::operator-() const {
  std::vector<Rational> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coords_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  std::vector<Rational> c(a.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] + b.coords_[i];
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  std::vector<Rational> c(a.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] - b.coords_[i];
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const Rational& q) {
  std::vector<Rational> c(a.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] * q;
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  const std::size_t n = a.coords_.size();
  if (n == 1) return FieldElement(a.field_, {a.coords_[0] * b.coords_[0]});
  std::vector<Rational> conv(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a.coords_[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(b.coords_[j]) == 0) continue;
      conv[i + j] += a.coords_[i] * b.coords_[j];
    }
  }
  std::vector<Rational> c(conv.begin(), conv.begin() + static_cast<long>(n));
  const auto& reduce = a.field_.impl().reduce;
  for (std::size_t k = n; k < conv.size(); ++k) {
    if (sgn(conv[k]) == 0) continue;
    const auto& row = reduce[k - n];
    for (std::size_t i = 0; i < n; ++i) c[i] += conv[k] * row[i];
  }
  return FieldElement(a.field_, std::move(c));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in " + field_.spec());
  if (coords_.size() == 1) return FieldElement(field_, {1 / coords_[0]});
  auto eg = extended_gcd(as_qpoly(coords_), field_.minimal_polynomial());
  if (eg.g.degree() != 0) throw std::logic_error("minimal polynomial is not irreducible");
  std::vector<Rational> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = eg.u.coeff(static_cast<int>(i));
  return FieldElement(field_, std::move(c));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return a * b.inverse();
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement result = field_.one();
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

int FieldElement::real_sign() const {
  if (!field_.is_real()) throw std::domain_error("sign requested in non-real field " + field_.spec());
  if (field_.degree() == 1) return sgn(coords_[0]);
  // a + b sqrt(d), d > 0
  const Rational& a = coords_[0];
  const Rational& b = coords_[1];
  const int sa = sgn(a), sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with b^2 d
  const Rational lhs = a * a;
  const Rational rhs = b * b * Rational(field_.parameter());
  const int c = cmp(lhs, rhs);
  return c > 0 ? sa : (c < 0 ? sb : 0);
}

FieldElement FieldElement::in_field(const NumberField& target) const {
  if (target == field_) return *this;
  if (field_.same_presentation(target)) return FieldElement(target, coords_);
  if (is_rational()) return target.from_rational(coords_[0]);
  throw std::invalid_argument("cannot move element of " + field_.spec() + " into " + target.spec());
}

bool FieldElement::operator==(const FieldElement& o) const {
  return field_ == o.field_ && coords_ == o.coords_;
}

std::string FieldElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  const std::string sym = field_.generator_symbol();
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Rational& q = coords_[i];
    if (sgn(q) == 0) continue;
    Rational mag = abs(q);
    if (first) {
      if (sgn(q) < 0) os << "-";
    } else {
      os << (sgn(q) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << sym;
    if (i > 1) os << "^" << i;
  }
  if (first) return "0";
  return os.str();
}

KPoly lift_polynomial(const QPoly& p, const NumberField& field) {
  std::vector<FieldElement> c;
  for (const auto& q : p.coefficients()) c.push_back(field.from_rational(q));
  return KPoly(std::move(c), field.zero());
}

}  // namespace waring
