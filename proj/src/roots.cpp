#include <waring/numeric.hpp>
#include <waring/roots.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace waring {

namespace {

Integer to_integer(double u) { return Integer(std::nearbyint(u)); }

Integer to_integer(const BigReal& u) {
  const BigReal r = round(u);
  const auto big = r.convert_to<boost::multiprecision::cpp_int>();
  return Integer(big.str());
}

double nearest(double u) { return std::nearbyint(u); }
BigReal nearest(const BigReal& u) { return round(u); }

/// Embedding indices, one per complex-conjugate pair.
std::vector<int> representative_embeddings(const NumberField& k) {
  const auto conj = k.conjugate_embedding();
  std::vector<int> reps;
  for (int j = 0; j < static_cast<int>(conj.size()); ++j)
    if (j <= conj[static_cast<std::size_t>(j)]) reps.push_back(j);
  return reps;
}

template <class T>
std::vector<std::vector<T>> invert(std::vector<std::vector<T>> a) {
  using std::abs;
  const std::size_t n = a.size();
  std::vector<std::vector<T>> inv(n, std::vector<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = T(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t i = c + 1; i < n; ++i)
      if (abs(a[i][c]) > abs(a[p][c])) p = i;
    if (a[p][c] == 0) throw std::logic_error("embedding matrix is singular");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const T piv = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const T f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

template <class T>
struct Level {
  /// D-scaled coordinate contribution of each candidate root.
  std::vector<std::vector<T>> contrib;
  std::vector<T> lo, hi;
};

struct SearchResult {
  std::vector<FieldElement> roots;
  bool reliable = true;
  bool exhausted = true;
  bool missing_certified = false;
};

// Roots of sigma_j(p) for each representative embedding, with radii.
template <class T>
struct EmbeddedRoots {
  std::vector<std::vector<Cx<T>>> roots;
  std::vector<T> max_radius;
  bool ok = true;
};

EmbeddedRoots<double> embedded_roots_double(const KPoly& p, const std::vector<int>& reps) {
  EmbeddedRoots<double> out;
  const auto images = generator_images<double>(p.leading().field());
  for (int j : reps) {
    const auto c = embed_polynomial<double>(p, images[static_cast<std::size_t>(j)]);
    const auto res = aberth<double>(c, {}, 1e-13, 500);
    if (!res.isolated) {
      out.ok = false;
      return out;
    }
    out.roots.push_back(res.roots);
    out.max_radius.push_back(res.radii.empty() ? 0.0 : *std::max_element(res.radii.begin(), res.radii.end()));
  }
  return out;
}

EmbeddedRoots<BigReal> embedded_roots_big(const KPoly& p, const std::vector<int>& reps, int bits) {
  EmbeddedRoots<BigReal> out;
  try {
    for (int j : reps) {
      const auto iv = complex_roots_numeric(p, bits, j);
      std::vector<BigComplex> z;
      BigReal rmax = 0;
      for (const auto& r : iv) {
        z.push_back(r.center);
        rmax = std::max(rmax, r.radius);
      }
      out.roots.push_back(std::move(z));
      out.max_radius.push_back(rmax);
    }
  } catch (const std::runtime_error&) {
    out.ok = false;
  }
  return out;
}

template <class T>
SearchResult conjugate_search(const KPoly& p, const EmbeddedRoots<T>& er, const std::vector<int>& reps,
                              const Integer& bound, const RootOptions& options) {
  using std::abs;
  SearchResult out;
  const NumberField& k = p.leading().field();
  const int n = k.degree();
  const auto images = generator_images<T>(k);

  // Real linear system: power-basis coordinates -> embedded values.
  std::vector<std::vector<T>> v;
  struct RowRef {
    int re = -1, im = -1;
    bool real = false;
  };
  std::vector<RowRef> rows;
  for (int j : reps) {
    const Cx<T>& g = images[static_cast<std::size_t>(j)];
    RowRef ref;
    ref.real = (g.im == 0);
    std::vector<T> re_row, im_row;
    Cx<T> pw(T(1), T(0));
    for (int e = 0; e < n; ++e) {
      re_row.push_back(pw.re);
      im_row.push_back(pw.im);
      pw = pw * g;
    }
    ref.re = static_cast<int>(v.size());
    v.push_back(re_row);
    if (!ref.real) {
      ref.im = static_cast<int>(v.size());
      v.push_back(im_row);
    }
    rows.push_back(ref);
  }
  if (static_cast<int>(v.size()) != n) throw std::logic_error("embedding rows do not match field degree");
  const auto w = invert(v);

  const T scale = to_real<T>(Rational(bound));
  T row_norm(0);
  for (int c = 0; c < n; ++c) {
    T s(0);
    for (int r = 0; r < n; ++r) s += abs(w[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)]);
    row_norm = std::max(row_norm, s);
  }
  T radius(0);
  for (const auto& r : er.max_radius) radius = std::max(radius, r);

  std::vector<Level<T>> levels;
  T magnitude(0);
  for (std::size_t l = 0; l < reps.size(); ++l) {
    Level<T> lev;
    for (const auto& z : er.roots[l]) {
      if (rows[l].real && abs(z.im) > 4 * er.max_radius[l] + T(1e-8) * (1 + abs(z.re))) continue;
      std::vector<T> c(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        T val = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(rows[l].re)] * z.re;
        if (!rows[l].real) val += w[static_cast<std::size_t>(i)][static_cast<std::size_t>(rows[l].im)] * z.im;
        c[static_cast<std::size_t>(i)] = val * scale;
        magnitude = std::max(magnitude, T(abs(c[static_cast<std::size_t>(i)])));
      }
      lev.contrib.push_back(std::move(c));
    }
    if (lev.contrib.empty()) {
      // no admissible root under this embedding: nothing lies in K
      return out;
    }
    lev.lo = lev.hi = lev.contrib.front();
    for (const auto& c : lev.contrib)
      for (int i = 0; i < n; ++i) {
        lev.lo[static_cast<std::size_t>(i)] = std::min(lev.lo[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i)]);
        lev.hi[static_cast<std::size_t>(i)] = std::max(lev.hi[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i)]);
      }
    levels.push_back(std::move(lev));
  }

  const T rounding = std::is_same_v<T, double> ? T(1e-13) * (magnitude + 1) : T(0);
  const T err = scale * row_norm * radius + rounding;
  if (!(err < T(0.125))) {
    out.reliable = false;
    return out;
  }
  const T window(0.25);

  const std::size_t depth = levels.size();
  // suffix bounds for pruning
  std::vector<std::vector<T>> suf_lo(depth + 1, std::vector<T>(static_cast<std::size_t>(n), T(0)));
  std::vector<std::vector<T>> suf_hi = suf_lo;
  for (std::size_t l = depth; l-- > 0;)
    for (int i = 0; i < n; ++i) {
      suf_lo[l][static_cast<std::size_t>(i)] = suf_lo[l + 1][static_cast<std::size_t>(i)] + levels[l].lo[static_cast<std::size_t>(i)];
      suf_hi[l][static_cast<std::size_t>(i)] = suf_hi[l + 1][static_cast<std::size_t>(i)] + levels[l].hi[static_cast<std::size_t>(i)];
    }

  auto feasible = [&](const std::vector<T>& partial, std::size_t next) {
    for (int i = 0; i < n; ++i) {
      const T lo = partial[static_cast<std::size_t>(i)] + suf_lo[next][static_cast<std::size_t>(i)] - window;
      const T hi = partial[static_cast<std::size_t>(i)] + suf_hi[next][static_cast<std::size_t>(i)] + window;
      using std::floor;
      if (floor(hi) < lo) return false;
    }
    return true;
  };

  std::uint64_t leaves = 0;
  const Rational denom(bound);

  auto verify_leaf = [&](const std::vector<T>& u) -> bool {
    for (int i = 0; i < n; ++i)
      if (!(abs(u[static_cast<std::size_t>(i)] - nearest(u[static_cast<std::size_t>(i)])) < window)) return false;
    std::vector<Rational> coords;
    for (int i = 0; i < n; ++i) coords.push_back(Rational(to_integer(u[static_cast<std::size_t>(i)])) / denom);
    FieldElement alpha = k.element(std::move(coords));
    if (!p(alpha).is_zero()) return false;
    if (std::find(out.roots.begin(), out.roots.end(), alpha) == out.roots.end()) out.roots.push_back(alpha);
    return true;
  };

  // Depth-first over root choices; level 0 is the designated embedding.
  std::vector<std::vector<T>> partial(depth + 1, std::vector<T>(static_cast<std::size_t>(n), T(0)));
  std::vector<std::size_t> choice(depth, 0);
  for (std::size_t first = 0; first < levels[0].contrib.size(); ++first) {
    for (int i = 0; i < n; ++i)
      partial[1][static_cast<std::size_t>(i)] = levels[0].contrib[first][static_cast<std::size_t>(i)];
    bool found = false;
    if (depth == 1) {
      ++leaves;
      found = verify_leaf(partial[1]);
    } else if (feasible(partial[1], 1)) {
      std::size_t l = 1;
      choice[1] = 0;
      while (l >= 1 && !found) {
        if (choice[l] == levels[l].contrib.size()) {
          --l;
          if (l >= 1) ++choice[l];
          continue;
        }
        const auto& c = levels[l].contrib[choice[l]];
        for (int i = 0; i < n; ++i)
          partial[l + 1][static_cast<std::size_t>(i)] = partial[l][static_cast<std::size_t>(i)] + c[static_cast<std::size_t>(i)];
        if (l + 1 == depth) {
          if (++leaves > options.max_combinations) {
            out.exhausted = false;
            return out;
          }
          if (verify_leaf(partial[l + 1])) found = true;
          ++choice[l];
        } else if (feasible(partial[l + 1], l + 1)) {
          ++l;
          choice[l] = 0;
        } else {
          ++choice[l];
        }
      }
    }
    if (!found && options.stop_on_missing) {
      out.missing_certified = true;
      out.exhausted = false;
      return out;
    }
  }
  return out;
}

RootFinding numeric_roots(const KPoly& p, const RootOptions& options) {
  RootFinding res{p, {}, false, false, false, p.degree()};
  const NumberField& k = p.leading().field();
  const auto reps = representative_embeddings(k);
  const Integer bound = root_denominator_bound(p);

  auto absorb = [&](const SearchResult& s) {
    res.roots_in_field = s.roots;
    res.complete = s.exhausted || static_cast<int>(s.roots.size()) == p.degree();
    if (s.missing_certified) {
      res.complete = false;
      res.missing_certified = true;
    }
  };

  const auto small = embedded_roots_double(p, reps);
  if (small.ok) {
    const auto s = conjugate_search<double>(p, small, reps, bound, options);
    if (s.reliable) {
      absorb(s);
      return res;
    }
  }
  int bits = std::min(options.precision_bits, kMaxPrecisionBits);
  for (int attempt = 0; attempt < 2; ++attempt) {
    const auto big = embedded_roots_big(p, reps, bits);
    if (big.ok) {
      const auto s = conjugate_search<BigReal>(p, big, reps, bound, options);
      if (s.reliable) {
        absorb(s);
        return res;
      }
    }
    bits = std::min(2 * bits, kMaxPrecisionBits);
  }
  return res;
}

}  // namespace

Integer root_denominator_bound(const KPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("root bound of the zero polynomial");
  const KPoly m = p.monic();
  Integer delta = 1;
  for (const auto& c : m.coefficients()) {
    const Integer den = c.common_denominator();
    mpz_lcm(delta.get_mpz_t(), delta.get_mpz_t(), den.get_mpz_t());
  }
  return delta * m.leading().field().integrality_denominator();
}

RootFinding polynomial_roots_in_field(const KPoly& p, const RootOptions& options) {
  if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  if (!is_squarefree(p)) throw std::invalid_argument("roots_in_field needs a square-free polynomial");
  RootFinding res{p, {}, false, true, false, p.degree()};
  if (p.degree() == 0) return res;
  if (p.degree() == 1) {
    res.roots_in_field.push_back(-(p.coeff(0) / p.coeff(1)));
    return res;
  }
  if (p.degree() == 2 && options.method == RootOptions::Method::Auto) {
    const FieldElement& a = p.coeff(2);
    const FieldElement& b = p.coeff(1);
    const FieldElement& c = p.coeff(0);
    const FieldElement disc = b * b - a * c * Rational(4);
    auto [s, complete] = sqrt_in_field(disc);
    res.complete = complete;
    if (s) {
      const FieldElement two_a = a * Rational(2);
      res.roots_in_field.push_back((-b + *s) / two_a);
      res.roots_in_field.push_back((-b - *s) / two_a);
      res.complete = true;
    }
    return res;
  }
  return numeric_roots(p, options);
}

RootFinding roots_in_field(const BinaryForm& h, const NumberField& k, const RootOptions& options) {
  const BinaryForm hk = h.in_field(k);
  if (!squarefree_test(hk)) throw std::invalid_argument("roots_in_field needs a square-free form");
  RootFinding res = polynomial_roots_in_field(hk.dehomogenize(), options);
  res.point_at_infinity = hk.y_multiplicity() == 1;
  res.form_degree = hk.degree();
  return res;
}

std::optional<FieldElement> recognize_in_field(const ComplexInterval& rho, const KPoly& p,
                                               const Integer& denominator_bound, int precision_bits) {
  if (p.is_zero()) return std::nullopt;
  const NumberField& k = p.leading().field();
  const auto reps = representative_embeddings(k);
  const int bits = std::min(precision_bits, kMaxPrecisionBits);
  EmbeddedRoots<BigReal> er;
  er.roots.push_back({rho.center});
  er.max_radius.push_back(rho.radius);
  if (reps.size() > 1) {
    std::vector<int> rest(reps.begin() + 1, reps.end());
    auto others = embedded_roots_big(p, rest, bits);
    if (!others.ok) return std::nullopt;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      er.roots.push_back(others.roots[i]);
      er.max_radius.push_back(others.max_radius[i]);
    }
  }
  RootOptions opts;
  const auto s = conjugate_search<BigReal>(p, er, reps, denominator_bound, opts);
  if (s.roots.empty()) return std::nullopt;
  return s.roots.front();
}

std::pair<std::optional<FieldElement>, bool> sqrt_in_field(const FieldElement& a) {
  const NumberField& k = a.field();
  if (a.is_zero()) return {k.zero(), true};
  KPoly p({-a, k.zero(), k.one()}, k.zero());
  RootOptions opts;
  opts.method = RootOptions::Method::Numeric;
  const auto r = polynomial_roots_in_field(p, opts);
  if (r.roots_in_field.empty()) return {std::nullopt, r.complete};
  // canonical choice: the root whose first nonzero coordinate is positive
  for (const auto& s : r.roots_in_field)
    for (const auto& c : s.coords())
      if (sgn(c) != 0) {
        if (sgn(c) > 0) return {s, true};
        break;
      }
  return {r.roots_in_field.front(), true};
}

std::optional<bool> has_root_in_field(const KPoly& p, const RootOptions& options) {
  const auto r = polynomial_roots_in_field(p, options);
  if (!r.roots_in_field.empty()) return true;
  if (r.complete) return false;
  return std::nullopt;
}

}  // namespace waring
