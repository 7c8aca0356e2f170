#include <waring/numeric.hpp>
#include <waring/approx.hpp>

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace waring {

namespace {

BigReal from_mpz(const mpz_srcptr z) {
  BigReal r = 0;
  const std::size_t n = mpz_size(z);
  for (std::size_t i = n; i-- > 0;)
    r = ldexp(r, GMP_NUMB_BITS) + BigReal(static_cast<unsigned long long>(mpz_getlimbn(z, static_cast<mp_size_t>(i))));
  return mpz_sgn(z) < 0 ? BigReal(-r) : r;
}

template <class T>
T abs_real(const T& x) {
  using std::abs;
  return abs(x);
}

template <class T>
std::vector<Cx<T>> compute_generator_images(const NumberField& field) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  std::vector<Cx<T>> out;
  switch (field.kind()) {
    case NumberField::Kind::Rationals:
      out.emplace_back(T(0), T(0));
      break;
    case NumberField::Kind::Cyclotomic: {
      const T two_pi = 2 * boost::math::constants::pi<T>();
      const long n = field.parameter();
      for (long j : field.embedding_labels()) {
        const T angle = two_pi * T(j) / T(n);
        out.emplace_back(cos(angle), sin(angle));
      }
      if (n <= 2) out = {Cx<T>(T(n == 1 ? 1 : -1), T(0))};
      break;
    }
    case NumberField::Kind::Quadratic: {
      const long d = field.parameter();
      const T root = sqrt(T(d < 0 ? -d : d));
      if (d < 0) {
        out.emplace_back(T(0), root);
        out.emplace_back(T(0), -root);
      } else {
        out.emplace_back(root, T(0));
        out.emplace_back(-root, T(0));
      }
      break;
    }
    default:
      throw std::domain_error("no embeddings for " + field.spec());
  }
  return out;
}

}  // namespace

template <>
double to_real<double>(const Rational& q) {
  return q.get_d();
}

template <>
BigReal to_real<BigReal>(const Rational& q) {
  return from_mpz(q.get_num_mpz_t()) / from_mpz(q.get_den_mpz_t());
}

template <class T>
std::vector<Cx<T>> generator_images(const NumberField& field) {
  if constexpr (std::is_same_v<T, BigReal>) {
    static std::mutex mu;
    static std::map<std::string, std::vector<Cx<T>>> cache;
    std::lock_guard lock(mu);
    auto [it, inserted] = cache.try_emplace(field.spec());
    if (inserted) it->second = compute_generator_images<T>(field);
    return it->second;
  } else {
    return compute_generator_images<T>(field);
  }
}

template <class T>
Cx<T> embed_with(const FieldElement& a, const Cx<T>& g) {
  Cx<T> acc(T(0), T(0));
  const auto c = a.coords();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * g + Cx<T>(to_real<T>(c[i]), T(0));
  return acc;
}

ComplexInterval embed(const FieldElement& a, int precision_bits) {
  if (precision_bits > kMaxPrecisionBits)
    throw std::invalid_argument("precision above " + std::to_string(kMaxPrecisionBits) + " bits");
  const auto images = generator_images<BigReal>(a.field());
  ComplexInterval out{embed_with(a, images[0]), BigReal(0)};
  // Working precision exceeds the request by a wide margin; the radius
  // reports what was asked for.
  out.radius = ldexp(BigReal(1), -precision_bits);
  return out;
}

template <class T>
std::vector<Cx<T>> embed_polynomial(const KPoly& p, const Cx<T>& g) {
  std::vector<Cx<T>> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(embed_with(c, g));
  return out;
}

template <class T>
AberthResult<T> aberth(std::span<const Cx<T>> coeffs, std::span<const Cx<T>> start,
                       const T& tolerance, int max_iterations) {
  using std::pow;
  AberthResult<T> res;
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n < 1) {
    res.isolated = res.converged = true;
    return res;
  }
  const Cx<T>& lead = coeffs[static_cast<std::size_t>(n)];
  const T lead_abs = lead.abs();
  if (lead_abs == 0) throw std::invalid_argument("aberth: zero leading coefficient");

  auto eval = [&](const Cx<T>& z, Cx<T>& value, Cx<T>& deriv) {
    value = coeffs[static_cast<std::size_t>(n)];
    deriv = Cx<T>(T(0), T(0));
    for (int i = n - 1; i >= 0; --i) {
      deriv = deriv * z + value;
      value = value * z + coeffs[static_cast<std::size_t>(i)];
    }
  };

  auto& z = res.roots;
  if (static_cast<int>(start.size()) == n) {
    z.assign(start.begin(), start.end());
  } else {
    T bound(0);
    for (int k = 1; k <= n; ++k) {
      const T ratio = coeffs[static_cast<std::size_t>(n - k)].abs() / lead_abs;
      if (ratio == 0) continue;
      bound = std::max(bound, T(pow(ratio, T(1) / T(k))));
    }
    if (bound == 0) bound = T(1);
    using std::cos;
    using std::sin;
    const T two_pi = 2 * boost::math::constants::pi<T>();
    for (int k = 0; k < n; ++k) {
      const T angle = two_pi * T(k) / T(n) + T(0.4);
      z.emplace_back(bound * cos(angle), bound * sin(angle));
    }
  }

  Cx<T> value, deriv;
  for (int it = 0; it < max_iterations; ++it) {
    T max_step(0);
    for (int k = 0; k < n; ++k) {
      auto& zk = z[static_cast<std::size_t>(k)];
      eval(zk, value, deriv);
      if (value.norm() == 0) continue;
      Cx<T> sum(T(0), T(0));
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        const Cx<T> diff = zk - z[static_cast<std::size_t>(j)];
        if (diff.norm() == 0) continue;
        sum = sum + Cx<T>(T(1), T(0)) / diff;
      }
      Cx<T> step;
      if (deriv.norm() == 0) {
        step = Cx<T>(tolerance * 16, tolerance * 16);
      } else {
        const Cx<T> ratio = value / deriv;
        const Cx<T> denom = Cx<T>(T(1), T(0)) - ratio * sum;
        step = denom.norm() == 0 ? ratio : ratio / denom;
      }
      zk = zk - step;
      const T scale = std::max(T(1), zk.abs());
      max_step = std::max(max_step, T(step.abs() / scale));
    }
    if (max_step < tolerance) {
      res.converged = true;
      break;
    }
  }

  res.radii.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    eval(z[static_cast<std::size_t>(k)], value, deriv);
    T prod = lead_abs;
    for (int j = 0; j < n; ++j)
      if (j != k) prod *= (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]).abs();
    res.radii[static_cast<std::size_t>(k)] =
        prod == 0 ? T(std::numeric_limits<double>::infinity()) : T(T(n) * value.abs() / prod);
  }
  res.isolated = true;
  for (int k = 0; k < n && res.isolated; ++k)
    for (int j = k + 1; j < n; ++j) {
      const T gap = (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]).abs();
      if (!(gap > res.radii[static_cast<std::size_t>(k)] + res.radii[static_cast<std::size_t>(j)])) {
        res.isolated = false;
        break;
      }
    }
  return res;
}

std::vector<ComplexInterval> complex_roots_numeric(const KPoly& p, int precision_bits,
                                                   int embedding_index) {
  if (p.is_zero()) throw std::invalid_argument("complex_roots_numeric: zero polynomial");
  if (p.degree() > 64) throw std::invalid_argument("complex_roots_numeric: degree above 64");
  std::vector<ComplexInterval> out;
  if (p.degree() < 1) return out;

  const auto images = generator_images<BigReal>(p.leading().field());
  const auto big = embed_polynomial(p, images.at(static_cast<std::size_t>(embedding_index)));
  std::vector<Cx<double>> small;
  for (const auto& c : big) small.emplace_back(static_cast<double>(c.re), static_cast<double>(c.im));
  const auto rough = aberth<double>(small, {}, 1e-12, 2000);
  std::vector<BigComplex> start;
  if (rough.converged)
    for (const auto& r : rough.roots) start.emplace_back(BigReal(r.re), BigReal(r.im));

  int bits = std::min(precision_bits, kMaxPrecisionBits);
  for (int attempt = 0; attempt < 2; ++attempt) {
    const BigReal tol = ldexp(BigReal(1), -bits);
    const BigReal target = ldexp(BigReal(1), -bits / 2);
    auto fine = aberth<BigReal>(big, start, tol, start.empty() ? 4000 : 400);
    const bool tight = std::all_of(fine.radii.begin(), fine.radii.end(),
                                   [&](const BigReal& r) { return r <= target; });
    if (fine.isolated && tight) {
      for (std::size_t k = 0; k < fine.roots.size(); ++k)
        out.push_back({fine.roots[k], fine.radii[k]});
      return out;
    }
    start = fine.roots;
    bits = std::min(2 * bits, kMaxPrecisionBits);
  }
  throw std::runtime_error("complex_roots_numeric: could not isolate roots (repeated root?)");
}

template std::vector<Cx<double>> generator_images<double>(const NumberField&);
template std::vector<Cx<BigReal>> generator_images<BigReal>(const NumberField&);
template Cx<double> embed_with<double>(const FieldElement&, const Cx<double>&);
template Cx<BigReal> embed_with<BigReal>(const FieldElement&, const Cx<BigReal>&);
template std::vector<Cx<double>> embed_polynomial<double>(const KPoly&, const Cx<double>&);
template std::vector<Cx<BigReal>> embed_polynomial<BigReal>(const KPoly&, const Cx<BigReal>&);
template AberthResult<double> aberth<double>(std::span<const Cx<double>>, std::span<const Cx<double>>,
                                             const double&, int);
template AberthResult<BigReal> aberth<BigReal>(std::span<const Cx<BigReal>>,
                                               std::span<const Cx<BigReal>>, const BigReal&, int);

}  // namespace waring

namespace waring {

std::complex<double> approximate(const FieldElement& a) {
  if (a.field().kind() == NumberField::Kind::Rationals || a.is_rational())
    return {a.rational_value().get_d(), 0.0};
  const auto g = generator_images<double>(a.field()).front();
  const auto z = embed_with<double>(a, g);
  return {z.re, z.im};
}

}  // namespace waring
