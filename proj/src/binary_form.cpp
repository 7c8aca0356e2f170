#include <waring/binary_form.hpp>

#include <sstream>
#include <stdexcept>

namespace waring {

namespace {

void require_same_field(const NumberField& a, const NumberField& b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": field mismatch " + a.spec() + " vs " + b.spec());
}

int sign_of(const Rational& q) { return sgn(q); }
int sign_of(const FieldElement& a) { return a.real_sign(); }

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

template <class Coeff>
int sturm_count(const Polynomial<Coeff>& p) {
  using P = Polynomial<Coeff>;
  if (p.is_zero()) throw std::invalid_argument("real root count of the zero polynomial");
  if (p.degree() < 1) return 0;
  P sq = P::divmod(p, gcd(p, p.derivative())).first;
  std::vector<P> seq{sq, sq.derivative()};
  while (seq.back().degree() > 0) {
    P r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  std::vector<int> at_pos, at_neg;
  for (const auto& s : seq) {
    const int lc = sign_of(s.leading());
    at_pos.push_back(lc);
    at_neg.push_back(s.degree() % 2 == 0 ? lc : -lc);
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

void append_monomial(std::ostringstream& os, int xe, int ye) {
  bool any = false;
  if (xe > 0) {
    os << "x";
    if (xe > 1) os << "^" << xe;
    any = true;
  }
  if (ye > 0) {
    if (any) os << "*";
    os << "y";
    if (ye > 1) os << "^" << ye;
  }
}

}  // namespace

BinaryForm::BinaryForm(NumberField field, std::vector<FieldElement> monomial_coeffs)
    : field_(std::move(field)), coeffs_(std::move(monomial_coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("binary form needs at least one coefficient");
  bool all_zero = true;
  for (auto& c : coeffs_) {
    require_same_field(c.field(), field_, "binary form");
    if (!c.is_zero()) all_zero = false;
  }
  if (all_zero) throw std::invalid_argument("the zero form is not a binary form");
}

BinaryForm BinaryForm::over_rationals(const std::vector<Rational>& monomial_coeffs) {
  const NumberField q = NumberField::rationals();
  std::vector<FieldElement> c;
  c.reserve(monomial_coeffs.size());
  for (const auto& x : monomial_coeffs) c.push_back(q.from_rational(x));
  return BinaryForm(q, std::move(c));
}

BinaryForm BinaryForm::from_binomial_coeffs(const std::vector<FieldElement>& a) {
  if (a.empty()) throw std::invalid_argument("binary form needs at least one coefficient");
  const unsigned d = static_cast<unsigned>(a.size() - 1);
  std::vector<FieldElement> c;
  for (unsigned j = 0; j <= d; ++j) c.push_back(a[j] * Rational(binomial(d, j)));
  return BinaryForm(a.front().field(), std::move(c));
}

std::vector<FieldElement> BinaryForm::binomial_coeffs() const {
  const unsigned d = static_cast<unsigned>(degree());
  std::vector<FieldElement> a;
  a.reserve(coeffs_.size());
  for (unsigned j = 0; j <= d; ++j) a.push_back(coeffs_[j] * Rational(Integer(1), binomial(d, j)));
  return a;
}

std::vector<FieldElement> binomial_coeffs(const BinaryForm& f) { return f.binomial_coeffs(); }

int BinaryForm::y_multiplicity() const {
  int m = 0;
  while (coeffs_[static_cast<std::size_t>(m)].is_zero()) ++m;
  return m;
}

int BinaryForm::x_multiplicity() const {
  int m = 0;
  while (coeffs_[coeffs_.size() - 1 - static_cast<std::size_t>(m)].is_zero()) ++m;
  return m;
}

KPoly BinaryForm::dehomogenize() const {
  std::vector<FieldElement> p(coeffs_.rbegin(), coeffs_.rend());
  return KPoly(std::move(p), field_.zero());
}

BinaryForm BinaryForm::homogenize(const KPoly& p, int degree) {
  if (p.is_zero()) throw std::invalid_argument("cannot homogenize the zero polynomial");
  if (p.degree() > degree) throw std::invalid_argument("homogenize: degree below polynomial degree");
  std::vector<FieldElement> c;
  for (int j = 0; j <= degree; ++j) c.push_back(p.coeff(degree - j));
  return BinaryForm(p.leading().field(), std::move(c));
}

BinaryForm BinaryForm::in_field(const NumberField& target) const {
  if (target == field_) return *this;
  std::vector<FieldElement> c;
  for (const auto& x : coeffs_) c.push_back(x.in_field(target));
  return BinaryForm(target, std::move(c));
}

BinaryForm BinaryForm::scaled(const FieldElement& s) const {
  std::vector<FieldElement> c;
  for (const auto& x : coeffs_) c.push_back(x * s);
  return BinaryForm(field_, std::move(c));
}

BinaryForm BinaryForm::normalized() const {
  return scaled(coeffs_[static_cast<std::size_t>(y_multiplicity())].inverse());
}

bool BinaryForm::is_rational() const {
  for (const auto& c : coeffs_)
    if (!c.is_rational()) return false;
  return true;
}

std::string BinaryForm::to_string() const {
  std::ostringstream os;
  const int d = degree();
  bool first = true;
  for (int j = 0; j <= d; ++j) {
    const FieldElement& c = coeffs_[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    const bool constant_term = (j == 0 && d == 0);
    if (c.is_rational()) {
      const Rational q = c.rational_value();
      if (first) {
        if (sgn(q) < 0) os << "-";
      } else {
        os << (sgn(q) < 0 ? " - " : " + ");
      }
      const Rational mag = abs(q);
      if (mag != 1 || constant_term) {
        os << mag.get_str();
        if (!constant_term) os << "*";
      }
    } else {
      if (!first) os << " + ";
      os << "(" << c.to_string() << ")";
      if (!constant_term) os << "*";
    }
    first = false;
    append_monomial(os, d - j, j);
  }
  return os.str();
}

bool BinaryForm::operator==(const BinaryForm& o) const {
  return field_ == o.field_ && coeffs_ == o.coeffs_;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  require_same_field(a.field_, b.field_, "form product");
  std::vector<FieldElement> c(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
  }
  return BinaryForm(a.field_, std::move(c));
}

ProjectivePoint::ProjectivePoint(FieldElement alpha, FieldElement beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  require_same_field(alpha_.field(), beta_.field(), "projective point");
  if (!alpha_.is_zero()) {
    beta_ = beta_ / alpha_;
    alpha_ = alpha_.field().one();
  } else if (!beta_.is_zero()) {
    beta_ = beta_.field().one();
  } else {
    throw std::invalid_argument("(0 : 0) is not a projective point");
  }
}

std::vector<FieldElement> ProjectivePoint::power(int d) const {
  std::vector<FieldElement> c;
  c.reserve(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) {
    FieldElement term = alpha_.pow(d - j) * beta_.pow(j);
    c.push_back(term * Rational(binomial(static_cast<unsigned>(d), static_cast<unsigned>(j))));
  }
  return c;
}

BinaryForm ProjectivePoint::vanishing_form() const {
  return BinaryForm(alpha_.field(), {-beta_, alpha_});
}

ProjectivePoint point_from_root(const FieldElement& t) {
  return ProjectivePoint(t, t.field().one());
}

ProjectivePoint point_at_infinity(const NumberField& field) {
  return ProjectivePoint(field.one(), field.zero());
}

std::vector<FieldElement> apolar_coefficients(const BinaryForm& h, const BinaryForm& f) {
  require_same_field(h.field(), f.field(), "apolar_apply");
  const int r = h.degree(), d = f.degree();
  if (r > d) throw std::invalid_argument("apolar_apply: deg h exceeds deg f");
  const auto a = f.binomial_coeffs();
  const NumberField& k = f.field();
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(d - r) + 1);
  // d! / ((d-r-m)! m!) = C(d-r, m) * d! / (d-r)!
  Integer falling = 1;
  for (int i = d; i > d - r; --i) falling *= i;
  for (int m = 0; m <= d - r; ++m) {
    FieldElement s = k.zero();
    for (int i = 0; i <= r; ++i) {
      const auto& c = h.coeff(i);
      if (c.is_zero()) continue;
      s = s + c * a[static_cast<std::size_t>(i + m)];
    }
    const Integer scale = falling * binomial(static_cast<unsigned>(d - r), static_cast<unsigned>(m));
    out.push_back(s * Rational(scale));
  }
  return out;
}

std::optional<BinaryForm> apolar_apply(const BinaryForm& h, const BinaryForm& f) {
  auto c = apolar_coefficients(h, f);
  for (const auto& x : c)
    if (!x.is_zero()) return BinaryForm(f.field(), std::move(c));
  return std::nullopt;
}

std::optional<BinaryForm> derivative_x(const BinaryForm& f) {
  const int d = f.degree();
  if (d == 0) return std::nullopt;
  std::vector<FieldElement> c;
  bool nonzero = false;
  for (int j = 0; j < d; ++j) {
    c.push_back(f.coeff(j) * Rational(d - j));
    if (!c.back().is_zero()) nonzero = true;
  }
  if (!nonzero) return std::nullopt;
  return BinaryForm(f.field(), std::move(c));
}

std::optional<BinaryForm> derivative_y(const BinaryForm& f) {
  const int d = f.degree();
  if (d == 0) return std::nullopt;
  std::vector<FieldElement> c;
  bool nonzero = false;
  for (int j = 1; j <= d; ++j) {
    c.push_back(f.coeff(j) * Rational(j));
    if (!c.back().is_zero()) nonzero = true;
  }
  if (!nonzero) return std::nullopt;
  return BinaryForm(f.field(), std::move(c));
}

bool squarefree_test(const BinaryForm& h) {
  if (h.y_multiplicity() > 1) return false;
  const KPoly p = h.dehomogenize();
  return is_squarefree(p);
}

bool is_dth_power(const BinaryForm& f) {
  const auto a = f.binomial_coeffs();
  const std::size_t d = a.size() - 1;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (!(a[i] * a[j + 1] - a[i + 1] * a[j]).is_zero()) return false;
  return true;
}

int real_distinct_root_count(const QPoly& p) { return sturm_count(p); }

int real_distinct_root_count(const KPoly& p) {
  if (!p.is_zero() && !p.leading().field().is_real())
    throw std::domain_error("real root count over non-real field " + p.leading().field().spec());
  return sturm_count(p);
}

int real_root_count_with_multiplicity(const KPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("real root count of the zero polynomial");
  int total = 0;
  const auto parts = squarefree_decomposition(p);
  for (std::size_t i = 0; i < parts.size(); ++i)
    total += static_cast<int>(i + 1) * real_distinct_root_count(parts[i]);
  return total;
}

HyperbolicResult hyperbolic_test(const BinaryForm& f) {
  if (!f.field().is_real()) throw std::domain_error("hyperbolic_test needs a real field, got " + f.field().spec());
  HyperbolicResult res;
  res.tau = f.y_multiplicity() + real_root_count_with_multiplicity(f.dehomogenize());
  res.is_hyperbolic = res.tau == f.degree() && !is_dth_power(f);
  return res;
}

BinaryForm form_gcd(const BinaryForm& a, const BinaryForm& b) {
  require_same_field(a.field(), b.field(), "form gcd");
  const int m = std::min(a.y_multiplicity(), b.y_multiplicity());
  const KPoly g = gcd(a.dehomogenize(), b.dehomogenize());
  return BinaryForm::homogenize(g, g.degree() + m);
}

std::vector<FieldElement> combine_powers(std::span<const ProjectivePoint> points,
                                         std::span<const FieldElement> lambdas, int degree) {
  if (points.size() != lambdas.size()) throw std::invalid_argument("points and lambdas differ in length");
  if (points.empty()) throw std::invalid_argument("empty combination");
  const NumberField& k = points.front().alpha().field();
  std::vector<FieldElement> sum(static_cast<std::size_t>(degree) + 1, k.zero());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto pw = points[i].power(degree);
    for (std::size_t j = 0; j < pw.size(); ++j) sum[j] = sum[j] + lambdas[i] * pw[j];
  }
  return sum;
}

}  // namespace waring
