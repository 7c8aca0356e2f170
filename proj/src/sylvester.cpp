#include <waring/approx.hpp>
#include <waring/oracles.hpp>
#include <waring/roots.hpp>
#include <waring/sylvester.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

namespace waring {

Catalecticant::Catalecticant(const BinaryForm& f, int r)
    : r_(r), matrix_(f.field(), std::max(f.degree() - r + 1, 0), r + 1) {
  const int d = f.degree();
  if (r < 1 || r > d)
    throw std::invalid_argument("catalecticant order r = " + std::to_string(r) + " outside 1.." + std::to_string(d));
  const auto a = f.binomial_coeffs();
  for (int l = 0; l <= d - r; ++l)
    for (int t = 0; t <= r; ++t) matrix_(l, t) = a[static_cast<std::size_t>(l + t)];
}

Catalecticant catalecticant(const BinaryForm& f, int r) { return Catalecticant(f, r); }

std::vector<Vector> nullspace(const Catalecticant& c) { return nullspace(c.matrix()); }

BinaryForm form_from_vector(const NumberField& k, const Vector& c) { return BinaryForm(k, c); }

namespace {

Vector coefficients_of(const BinaryForm& f) { return Vector(f.coefficients().begin(), f.coefficients().end()); }

BinaryForm product_of_vanishing(const NumberField& k, const std::vector<ProjectivePoint>& points) {
  BinaryForm h(k, {k.one()});
  for (const auto& p : points) h = h * p.vanishing_form();
  return h;
}

bool proportional(const BinaryForm& a, const BinaryForm& b) {
  return a.degree() == b.degree() && a.normalized() == b.normalized();
}

BinaryForm swap_xy(const BinaryForm& f) {
  Vector c = coefficients_of(f);
  std::reverse(c.begin(), c.end());
  return BinaryForm(f.field(), std::move(c));
}

BinaryForm lift_form(const BinaryForm& f, const NumberField& k) {
  if (f.field() == k) return f;
  return f.in_field(k);
}

std::string vector_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

}  // namespace

CertificateChecks check_certificate(const SylvesterCertificate& cert, const BinaryForm& f_in) {
  CertificateChecks out;
  const NumberField& k = cert.h.field();
  BinaryForm f = f_in;
  try {
    f = lift_form(f_in, k);
  } catch (const std::invalid_argument&) {
    return out;
  }
  const int r = cert.length();
  if (static_cast<int>(cert.lambdas.size()) != r || r < 1 || cert.h.degree() != r || r > f.degree()) return out;
  for (const auto& p : cert.points)
    if (p.alpha().field() != k || p.beta().field() != k) return out;
  for (const auto& l : cert.lambdas)
    if (l.field() != k) return out;

  out.apolar = !apolar_apply(cert.h, f).has_value();
  out.splits = proportional(product_of_vanishing(k, cert.points), cert.h);
  out.reconstruction = combine_powers(cert.points, cert.lambdas, f.degree()) == coefficients_of(f);
  out.honest = true;
  for (int i = 0; i < r; ++i) {
    if (cert.lambdas[static_cast<std::size_t>(i)].is_zero()) out.honest = false;
    for (int j = i + 1; j < r; ++j) {
      const auto& p = cert.points[static_cast<std::size_t>(i)];
      const auto& q = cert.points[static_cast<std::size_t>(j)];
      if ((p.alpha() * q.beta() - q.alpha() * p.beta()).is_zero()) out.honest = false;
    }
  }
  return out;
}

void sort_points(std::vector<ProjectivePoint>& points) {
  struct Key {
    bool infinite;
    double angle, modulus;
  };
  auto key = [](const ProjectivePoint& p) {
    if (p.has_infinite_slope()) return Key{true, 0, 0};
    if (p.beta().is_zero()) return Key{false, 0, 0};
    const auto z = approximate(p.beta());
    double a = std::atan2(z.imag(), z.real());
    if (a < -1e-12) a += 2 * std::numbers::pi;
    if (a < 0) a = 0;
    return Key{false, a, std::abs(z)};
  };
  std::stable_sort(points.begin(), points.end(), [&](const ProjectivePoint& p, const ProjectivePoint& q) {
    const Key a = key(p), b = key(q);
    if (a.infinite != b.infinite) return b.infinite;
    if (std::abs(a.angle - b.angle) > 1e-9 * (1 + a.angle)) return a.angle < b.angle;
    return a.modulus < b.modulus - 1e-12 * (1 + a.modulus);
  });
}

std::vector<FieldElement> decompose(const BinaryForm& f, const std::vector<ProjectivePoint>& points) {
  if (points.empty()) throw std::invalid_argument("decompose needs at least one point");
  const NumberField& k = points.front().alpha().field();
  const BinaryForm g = lift_form(f, k);
  const int d = g.degree();
  const int r = static_cast<int>(points.size());
  Matrix m(k, d + 1, r);
  for (int i = 0; i < r; ++i) {
    const auto pw = points[static_cast<std::size_t>(i)].power(d);
    for (int j = 0; j <= d; ++j) m(j, i) = pw[static_cast<std::size_t>(j)];
  }
  const Vector b = coefficients_of(g);
  auto lambdas = solve(m, b);
  if (!lambdas) throw std::logic_error("Sylvester system is inconsistent for " + f.to_string());
  if (combine_powers(points, *lambdas, d) != b) throw std::logic_error("reconstruction failed for " + f.to_string());
  return *lambdas;
}

std::optional<SylvesterCertificate> certificate_from_form(const BinaryForm& f, const BinaryForm& h_in,
                                                          const NumberField& k, int precision_bits) {
  BinaryForm h = lift_form(h_in, k);
  for (const auto& c : h.coefficients())
    if (!c.is_zero()) {
      h = h.scaled(c.inverse());
      break;
    }
  if (h.degree() < 1 || !squarefree_test(h)) return std::nullopt;
  const BinaryForm g = lift_form(f, k);
  if (apolar_apply(h, g)) return std::nullopt;
  RootOptions opts;
  opts.precision_bits = precision_bits;
  opts.stop_on_missing = true;
  const RootFinding rf = roots_in_field(h, k, opts);
  if (!rf.splits()) return std::nullopt;
  std::vector<ProjectivePoint> points;
  for (const auto& t : rf.roots_in_field) points.push_back(point_from_root(t));
  if (rf.point_at_infinity) points.push_back(point_at_infinity(k));
  sort_points(points);
  auto lambdas = decompose(g, points);
  for (const auto& l : lambdas)
    if (l.is_zero()) return std::nullopt;
  return SylvesterCertificate{h, std::move(points), std::move(lambdas)};
}

namespace {

struct GridValue {
  FieldElement value;
  long height;
};

// Rationals p/q, then their multiples by powers of the generator, by height.
std::vector<GridValue> grid_values(const NumberField& k, int height) {
  std::vector<GridValue> out{{k.zero(), 0}};
  const int n = k.is_closure() ? 1 : k.degree();
  std::vector<FieldElement> gens{k.one()};
  for (int j = 1; j < n; ++j) gens.push_back(gens.back() * k.generator());
  for (long level = 1; level <= height; ++level)
    for (const auto& g : gens)
      for (long q = 1; q <= level; ++q)
        for (long p = -level; p <= level; ++p) {
          if (p == 0 || std::max(std::labs(p), q) != level || std::gcd(p, q) != 1) continue;
          out.push_back({g * make_rational(p, q), level});
        }
  return out;
}

// Visits h = b_k + sum_{i>k} w_i b_i by increasing height; stops when visit returns true
// or the budget runs out.  Returns false on budget exhaustion.
template <class Visit>
bool grid_search(const NumberField& k, const std::vector<Vector>& basis, const SearchBudget& budget,
                 std::uint64_t& candidates, Visit visit) {
  const auto values = grid_values(k, budget.height);
  const int m = static_cast<int>(basis.size());
  const std::size_t len = basis.front().size();
  for (long level = 0; level <= budget.height; ++level) {
    std::size_t avail = 0;
    while (avail < values.size() && values[avail].height <= level) ++avail;
    for (int lead = 0; lead < m; ++lead) {
      const int free = m - 1 - lead;
      if (level > 0 && free == 0) continue;
      std::vector<std::size_t> idx(static_cast<std::size_t>(free), 0);
      while (true) {
        long top = 0;
        for (auto i : idx) top = std::max(top, values[i].height);
        if (top == level) {
          if (candidates >= budget.max_candidates) return false;
          ++candidates;
          Vector c = basis[static_cast<std::size_t>(lead)];
          for (int i = 0; i < free; ++i) {
            const auto& w = values[idx[static_cast<std::size_t>(i)]].value;
            if (w.is_zero()) continue;
            const auto& b = basis[static_cast<std::size_t>(lead + 1 + i)];
            for (std::size_t t = 0; t < len; ++t) c[t] = c[t] + w * b[t];
          }
          if (visit(c)) return true;
        }
        int pos = free - 1;
        while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == avail) idx[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
      }
    }
  }
  return false;
}

BinaryForm gcd_of(const NumberField& k, const std::vector<Vector>& basis) {
  BinaryForm g = form_from_vector(k, basis.front());
  for (std::size_t i = 1; i < basis.size() && g.degree() > 0; ++i) g = form_gcd(g, form_from_vector(k, basis[i]));
  return g;
}

bool is_binomial_pencil(const std::vector<Vector>& basis) {
  if (basis.size() != 2) return false;
  const std::size_t r = basis[0].size() - 1;
  for (std::size_t t = 0; t <= r; ++t) {
    if (!(basis[0][t].is_zero() == (t != 0)) || !(basis[1][t].is_zero() == (t != r))) return false;
  }
  return true;
}

// Layers that settle a dimension >= 2 nullspace without searching.
// With closure set, k is Q standing in for R or C and only the repeated-factor rule applies.
std::optional<std::string> structural_exclusion(const NumberField& k, const std::vector<Vector>& basis, int r,
                                                const SearchBudget& budget, bool closure = false) {
  const BinaryForm g = gcd_of(k, basis);
  if (g.degree() >= 1) {
    if (!squarefree_test(g)) return "every member shares the repeated factor " + g.to_string();
    if (!closure) {
      RootOptions opts;
      opts.precision_bits = budget.precision_bits;
      opts.stop_on_missing = true;
      if (roots_in_field(g, k, opts).certainly_not_split())
        return "every member shares the factor " + g.to_string() + ", which does not split over " + k.spec();
    }
  }
  if (!closure && r >= 3 && is_binomial_pencil(basis)) {
    const auto has = has_root_in_field(lift_polynomial(cyclotomic_polynomial(r), k));
    if (has && !*has)
      return "nullspace is span{x^" + std::to_string(r) + ", y^" + std::to_string(r) + "} and zeta" +
             std::to_string(r) + " is not in " + k.spec();
  }
  return std::nullopt;
}

}  // namespace

SylvesterSearch find_sylvester_form(const BinaryForm& f_in, int r, const NumberField& k, const SearchBudget& budget) {
  if (k.is_closure()) throw std::invalid_argument("find_sylvester_form needs a number field");
  const BinaryForm f = lift_form(f_in, k);
  SylvesterSearch out;
  const auto basis = nullspace(catalecticant(f, r));
  out.nullspace_dimension = static_cast<int>(basis.size());
  if (basis.empty()) {
    out.definitive = true;
    out.detail = "nullspace at r=" + std::to_string(r) + " trivial";
    return out;
  }
  if (basis.size() == 1) {
    const BinaryForm h = form_from_vector(k, basis.front());
    out.candidates = 1;
    if (!squarefree_test(h)) {
      out.definitive = true;
      out.detail = "unique apolar form " + h.to_string() + " at r=" + std::to_string(r) + " is not square-free";
      return out;
    }
    RootOptions opts;
    opts.precision_bits = budget.precision_bits;
    opts.stop_on_missing = true;
    const RootFinding rf = roots_in_field(h, k, opts);
    if (rf.splits()) {
      out.certificate = certificate_from_form(f, h, k, budget.precision_bits);
      if (out.certificate) {
        out.status = SearchStatus::Found;
        out.detail = "unique apolar form " + h.to_string() + " splits over " + k.spec();
        return out;
      }
    }
    if (rf.certainly_not_split() || rf.splits()) {
      out.definitive = true;
      out.detail = "unique apolar form " + h.to_string() + " at r=" + std::to_string(r) + " does not split over " +
                   k.spec();
      return out;
    }
    out.status = SearchStatus::Exhausted;
    out.detail = "root search for " + h.to_string() + " incomplete";
    return out;
  }
  if (auto why = structural_exclusion(k, basis, r, budget)) {
    out.definitive = true;
    out.detail = *why;
    return out;
  }
  RootOptions opts;
  opts.precision_bits = budget.precision_bits;
  opts.stop_on_missing = true;
  const bool hit = grid_search(k, basis, budget, out.candidates, [&](const Vector& c) {
    const BinaryForm h = form_from_vector(k, c);
    if (!squarefree_test(h)) return false;
    if (!roots_in_field(h, k, opts).splits()) return false;
    out.certificate = certificate_from_form(f, h, k, budget.precision_bits);
    if (out.certificate) out.detail = "combination " + vector_string(c) + " gives " + h.to_string();
    return out.certificate.has_value();
  });
  if (hit) {
    out.status = SearchStatus::Found;
    return out;
  }
  out.status = SearchStatus::Exhausted;
  out.detail = "no square-free split member at r=" + std::to_string(r) + " within height " +
               std::to_string(budget.height) + " (" + std::to_string(out.candidates) + " candidates, nullspace dimension " +
               std::to_string(basis.size()) + ")";
  return out;
}

namespace {

// f = c x^3 y^2 (mirror = c x^2 y^3) and f = c (6 x^5 y - 20 x^3 y^3) (and mirror).
enum class Pattern { None, QuinticMonomial, Sextic };

struct PatternMatch {
  Pattern pattern = Pattern::None;
  bool mirrored = false;
};

PatternMatch match_pattern(const BinaryForm& f) {
  auto only = [&](const BinaryForm& g, std::initializer_list<int> nz) {
    for (int j = 0; j <= g.degree(); ++j) {
      const bool want = std::find(nz.begin(), nz.end(), j) != nz.end();
      if (g.coeff(j).is_zero() == want) return false;
    }
    return true;
  };
  for (bool mirrored : {false, true}) {
    const BinaryForm g = mirrored ? swap_xy(f) : f;
    if (g.degree() == 5 && only(g, {2})) return {Pattern::QuinticMonomial, mirrored};
    if (g.degree() == 6 && only(g, {1, 3}) && g.coeff(3) * Rational(6) == g.coeff(1) * Rational(-20))
      return {Pattern::Sextic, mirrored};
  }
  return {};
}

struct Override {
  SylvesterSearch search;
  std::vector<Evidence> notes;
};

std::optional<Override> theorem_override(const BinaryForm& f, int r, const NumberField& k, const SearchBudget& budget) {
  const PatternMatch pm = match_pattern(f);
  if (pm.pattern == Pattern::None || k.is_closure()) return std::nullopt;
  auto finish = [&](const BinaryForm& h_unmirrored) -> std::optional<SylvesterCertificate> {
    const BinaryForm h = pm.mirrored ? swap_xy(h_unmirrored) : h_unmirrored;
    return certificate_from_form(f, h, k, budget.precision_bits);
  };
  auto from_roots = [&](const std::vector<FieldElement>& roots) {
    BinaryForm h(k, {k.one()});
    for (const auto& t : roots) h = h * BinaryForm(k, {k.one(), -t});
    return h;
  };
  const std::string name = pm.pattern == Pattern::QuinticMonomial ? "x^3*y^2" : "6*x^5*y - 20*x^3*y^3";

  if (r == 4) {
    const StufeEvidence ev = stufe_at_most_two(k);
    Override o;
    if (ev.verdict == StufeVerdict::AboveTwo) {
      o.search.definitive = true;
      o.search.detail = "theorem-backed: rank 4 for " + name + " requires s(K) <= 2; " + ev.reason;
      return o;
    }
    if (ev.verdict == StufeVerdict::Unknown) return std::nullopt;
    std::optional<SylvesterCertificate> cert;
    if (pm.pattern == Pattern::QuinticMonomial) {
      std::optional<std::array<FieldElement, 4>> quad;
      if (k.degree() == 2) {
        if (auto sol = solve_dioph_quartic(k)) {
          quad = sol->r;
          if (sol->generic_degenerate)
            o.notes.push_back({4, "construction",
                               "the r1 = r2 start repeats roots over " + k.spec() + "; alternate solution used", false});
        }
      } else if (ev.witness) {
        quad = quartic_from_pair(*ev.witness);
      }
      if (quad) cert = finish(from_roots({(*quad)[0], (*quad)[1], (*quad)[2], (*quad)[3]}));
    } else if (ev.witness) {
      const auto& [a, b] = *ev.witness;
      cert = finish(from_roots({a, -a, b, -b}));
    }
    if (!cert) return std::nullopt;
    o.search.status = SearchStatus::Found;
    o.search.certificate = std::move(cert);
    o.search.detail = "theorem-backed construction for " + name + " from r^2 + s^2 = -1 (" + ev.reason + ")";
    return o;
  }
  if (r == 5 && pm.pattern == Pattern::Sextic) {
    // y*(x^4 + x^2*y^2) - 2*x*y^4 from the apolar ideal generators
    const BinaryForm h(k, {k.zero(), k.one(), k.zero(), k.one(), k.from_rational(Rational(-2)), k.zero()});
    if (auto cert = finish(h)) {
      Override o;
      o.search.status = SearchStatus::Found;
      o.search.certificate = std::move(cert);
      o.search.detail = "theorem-backed candidate y*(x^4 + x^2*y^2) - 2*x*y^4 splits over " + k.spec();
      return o;
    }
  }
  return std::nullopt;
}

// Degree-d certificate with rational points: h = (x - s y) prod (x - j y).
std::optional<SylvesterCertificate> fallback_certificate(const BinaryForm& f, const NumberField& k, int precision_bits) {
  const int d = f.degree();
  for (long offset = 1; offset <= 64; ++offset) {
    BinaryForm p(k, {k.one()});
    for (long j = 0; j < d - 1; ++j) p = p * BinaryForm(k, {k.one(), k.from_rational(Rational(-(offset + j)))});
    const BinaryForm xp = p * BinaryForm(k, {k.one(), k.zero()});
    const BinaryForm yp = p * BinaryForm(k, {k.zero(), k.one()});
    const FieldElement a = apolar_coefficients(xp, f).front();
    const FieldElement b = apolar_coefficients(yp, f).front();
    BinaryForm h = yp;
    if (!b.is_zero()) {
      const FieldElement s = a / b;
      h = p * BinaryForm(k, {k.one(), -s});
    }
    if (auto cert = certificate_from_form(f, h, k, precision_bits)) return cert;
  }
  return std::nullopt;
}

void record(RankReport& rep, bool& all_definitive, int r, const std::string& kind, const std::string& detail,
            bool definitive) {
  rep.evidence.push_back({r, kind, detail, definitive});
  if (!definitive) all_definitive = false;
  if (definitive && all_definitive) rep.lower = r + 1;
}

void finish_found(RankReport& rep, int r, SylvesterCertificate cert, const std::string& detail) {
  rep.upper = r;
  rep.evidence.push_back({r, "certificate", detail, true});
  rep.certificate = std::move(cert);
}

RankReport rank_number_field(const BinaryForm& f, const NumberField& k, const SearchBudget& budget, RankReport rep) {
  const int d = f.degree();
  bool all_definitive = true;
  for (int r = 1; r <= d; ++r) {
    if (auto o = theorem_override(f, r, k, budget)) {
      for (auto& e : o->notes) rep.evidence.push_back(e);
      if (o->search.status == SearchStatus::Found) {
        finish_found(rep, r, std::move(*o->search.certificate), o->search.detail);
        break;
      }
      record(rep, all_definitive, r, "theorem-backed", o->search.detail, o->search.definitive);
      continue;
    }
    if (r == d) {
      auto cert = fallback_certificate(f, k, budget.precision_bits);
      if (!cert) throw std::logic_error("no degree-d certificate for " + f.to_string());
      finish_found(rep, r, std::move(*cert), "rational points at r = d");
      break;
    }
    SylvesterSearch s = find_sylvester_form(f, r, k, budget);
    if (s.status == SearchStatus::Found) {
      finish_found(rep, r, std::move(*s.certificate), s.detail);
      break;
    }
    const std::string kind = s.nullspace_dimension == 0   ? "trivial-nullspace"
                             : s.nullspace_dimension == 1 ? "unique-form"
                             : s.definitive               ? "structural"
                                                          : "search-exhausted";
    record(rep, all_definitive, r, kind, s.detail, s.definitive);
  }
  return rep;
}

// Shared loop for R and C: accept(h) says whether a square-free h is a Sylvester form.
template <class Accept>
RankReport rank_closure(const BinaryForm& f, const NumberField& q, const SearchBudget& budget, RankReport rep,
                        Accept accept) {
  const int d = f.degree();
  bool all_definitive = true;
  const bool complex = rep.field.kind() == NumberField::Kind::ComplexClosure;
  std::mt19937 rng(20240611u);
  for (int r = 1; r <= d; ++r) {
    const auto basis = nullspace(catalecticant(f, r));
    std::optional<BinaryForm> found;
    if (basis.empty()) {
      record(rep, all_definitive, r, "trivial-nullspace", "nullspace at r=" + std::to_string(r) + " trivial", true);
      continue;
    }
    if (basis.size() == 1) {
      const BinaryForm h = form_from_vector(q, basis.front());
      if (squarefree_test(h) && accept(h)) {
        found = h;
      } else {
        record(rep, all_definitive, r, "unique-form",
               "unique apolar form " + h.to_string() + " at r=" + std::to_string(r) +
                   (squarefree_test(h) ? " lacks " + std::to_string(r) + " distinct real roots" : " is not square-free"),
               true);
        continue;
      }
    } else if (auto why = structural_exclusion(q, basis, r, budget, true)) {
      record(rep, all_definitive, r, "structural", *why, true);
      continue;
    } else if (complex) {
      std::uniform_int_distribution<int> coef(-9, 9);
      for (int sample = 0; sample < 64 && !found; ++sample) {
        Vector c = basis.front();
        for (std::size_t i = 1; i < basis.size(); ++i) {
          const Rational w(coef(rng));
          for (std::size_t t = 0; t < c.size(); ++t) c[t] = c[t] + basis[i][t] * w;
        }
        const BinaryForm h = form_from_vector(q, c);
        if (squarefree_test(h)) found = h;
      }
    } else {
      std::uint64_t n = 0;
      grid_search(q, basis, budget, n, [&](const Vector& c) {
        const BinaryForm h = form_from_vector(q, c);
        if (!squarefree_test(h) || !accept(h)) return false;
        found = h;
        return true;
      });
    }
    if (!found && r == d) {
      auto cert = fallback_certificate(f, q, budget.precision_bits);
      if (!cert) throw std::logic_error("no degree-d certificate for " + f.to_string());
      finish_found(rep, r, std::move(*cert), "rational points at r = d");
      break;
    }
    if (!found) {
      record(rep, all_definitive, r, "search-exhausted",
             "no square-free" + std::string(complex ? "" : " real-rooted") + " member found at r=" + std::to_string(r),
             false);
      continue;
    }
    rep.upper = r;
    rep.witness = *found;
    if (auto cert = certificate_from_form(f, *found, q, budget.precision_bits)) {
      rep.certificate = std::move(cert);
      rep.evidence.push_back({r, "certificate", found->to_string() + " splits over Q", true});
    } else {
      rep.evidence.push_back({r, "witness",
                              found->to_string() + (complex ? " is square-free" : " has distinct real roots only"),
                              true});
    }
    break;
  }
  return rep;
}

int real_root_total(const BinaryForm& h) {
  return real_distinct_root_count(h.dehomogenize()) + (h.y_multiplicity() > 0 ? 1 : 0);
}

}  // namespace

RankReport rank(const BinaryForm& f_in, const NumberField& k, const SearchBudget& budget) {
  if (f_in.degree() < 1) throw std::invalid_argument("rank needs a form of degree >= 1");
  RankReport rep{f_in, k, 1, 0, false, std::nullopt, std::nullopt, {}, budget};
  if (k.is_closure()) {
    if (!f_in.is_rational())
      throw std::invalid_argument("R and C modes need rational coefficients, got " + f_in.to_string());
    const NumberField q = NumberField::rationals();
    const BinaryForm f = f_in.in_field(q);
    rep.form = f;
    if (k.kind() == NumberField::Kind::RealClosure) {
      if (!is_dth_power(f)) {
        const HyperbolicResult hyp = hyperbolic_test(f);
        if (hyp.is_hyperbolic) {
          rep.lower = rep.upper = f.degree();
          rep.exact = true;
          rep.evidence.push_back({f.degree(), "hyperbolic",
                                  "all " + std::to_string(hyp.tau) + " linear factors are real; real rank equals degree",
                                  true});
          if (auto cert = fallback_certificate(f, q, budget.precision_bits)) rep.certificate = std::move(cert);
          return rep;
        }
      }
      rep = rank_closure(f, q, budget, rep, [](const BinaryForm& h) { return real_root_total(h) == h.degree(); });
    } else {
      rep = rank_closure(f, q, budget, rep, [](const BinaryForm&) { return true; });
    }
  } else {
    rep.form = lift_form(f_in, k);
    rep = rank_number_field(rep.form, k, budget, rep);
  }
  if (rep.upper == 0) throw std::logic_error("rank search produced no upper bound");
  rep.exact = rep.lower == rep.upper;
  return rep;
}

namespace {

std::vector<Vector> apolar_basis(const BinaryForm& f, int e) {
  if (e > f.degree()) {
    std::vector<Vector> out;
    for (int t = 0; t <= e; ++t) {
      Vector v(static_cast<std::size_t>(e) + 1, f.field().zero());
      v[static_cast<std::size_t>(t)] = f.field().one();
      out.push_back(v);
    }
    return out;
  }
  return nullspace(catalecticant(f, e));
}

std::optional<BinaryForm> reduce_modulo(const BinaryForm& v, const BinaryForm& g) {
  if (g.coeff(0).is_zero()) return std::nullopt;
  const KPoly rem = v.dehomogenize() % g.dehomogenize();
  if (rem == KPoly(v.field().zero())) return std::nullopt;
  return BinaryForm::homogenize(rem, v.degree());
}

}  // namespace

std::pair<BinaryForm, BinaryForm> apolar_ideal_generators(const BinaryForm& f) {
  const int d = f.degree();
  if (d < 1) throw std::invalid_argument("apolar ideal needs a form of degree >= 1");
  const NumberField& k = f.field();
  int s = 1;
  std::vector<Vector> low;
  for (; s <= d; ++s) {
    low = nullspace(catalecticant(f, s));
    if (!low.empty()) break;
  }
  const BinaryForm g1 = form_from_vector(k, low.front());
  const int e = d + 2 - s;
  const auto high = apolar_basis(f, e);

  // Rows: multiples x^(e-s-i) y^i g1.
  std::vector<Vector> rows;
  for (int i = 0; i <= e - s; ++i) {
    Vector v(static_cast<std::size_t>(e) + 1, k.zero());
    for (int t = 0; t <= s; ++t) v[static_cast<std::size_t>(i + t)] = g1.coeff(t);
    rows.push_back(v);
  }
  auto rank_of = [&](const std::vector<Vector>& rs) {
    Matrix m(k, static_cast<int>(rs.size()), e + 1);
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (int j = 0; j <= e; ++j) m(static_cast<int>(i), j) = rs[i][static_cast<std::size_t>(j)];
    return matrix_rank(m);
  };
  const int base = rank_of(rows);
  for (const auto& v : high) {
    auto ext = rows;
    ext.push_back(v);
    if (rank_of(ext) == base) continue;
    BinaryForm g2 = form_from_vector(k, v);
    if (auto red = reduce_modulo(g2, g1)) {
      g2 = *red;
    } else if (auto red2 = reduce_modulo(swap_xy(g2), swap_xy(g1))) {
      g2 = swap_xy(*red2);
    }
    g2 = g2.normalized();
    if (form_gcd(g1, g2).degree() != 0) throw std::logic_error("apolar generators share a factor");
    return {g1, g2};
  }
  throw std::logic_error("no second apolar generator found");
}

SignChangeResult sign_change_check(const SylvesterCertificate& cert, const BinaryForm& f_in) {
  const NumberField& k = cert.h.field();
  const bool real_field = !k.is_closure() && k.is_real();
  auto require_real = [&](const FieldElement& a) {
    if (!real_field && !a.is_rational()) throw std::domain_error("sign_change_check needs real data");
  };
  for (const auto& p : cert.points) {
    require_real(p.alpha());
    require_real(p.beta());
  }
  for (const auto& l : cert.lambdas) require_real(l);
  const BinaryForm f = lift_form(f_in, k);
  if (!real_field && !f.is_rational()) throw std::domain_error("sign_change_check needs a real form");
  if (is_dth_power(f)) throw std::invalid_argument("sign_change_check needs a form that is not a d-th power");
  auto sign_of = [&](const FieldElement& a) {
    return real_field ? a.real_sign() : sgn(a.rational_value());
  };
  const int d = f.degree();
  // Canonical points already have alpha in {0, 1} and beta = 1 when alpha = 0,
  // i.e. angle in (-pi/2, pi/2]; order by slope beta/alpha with alpha = 0 last.
  std::vector<std::size_t> order(cert.points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const auto& p = cert.points[i];
    const auto& q = cert.points[j];
    if (p.has_infinite_slope() != q.has_infinite_slope()) return q.has_infinite_slope();
    if (p.has_infinite_slope()) return false;
    return sign_of(p.beta() - q.beta()) < 0;
  });
  std::vector<int> signs;
  for (auto i : order) signs.push_back(sign_of(cert.lambdas[i]));
  signs.push_back(d % 2 == 0 ? signs.front() : -signs.front());
  SignChangeResult out;
  for (std::size_t i = 1; i < signs.size(); ++i)
    if (signs[i] * signs[i - 1] < 0) ++out.sigma;
  const BinaryForm fr = real_field ? f : f.in_field(NumberField::rationals());
  out.tau = hyperbolic_test(fr).tau;
  out.ok = out.tau <= out.sigma;
  return out;
}

}  // namespace waring
