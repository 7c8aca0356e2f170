#include <waring/approx.hpp>
#include <waring/expression.hpp>
#include <waring/oracles.hpp>
#include <waring/reproduce.hpp>

#include <cmath>
#include <sstream>

namespace waring {

namespace {

struct Term {
  FieldElement coeff, alpha, beta;
};

// sum coeff * (alpha x + beta y)^d == scale * f ?
bool identity_holds(const BinaryForm& f, const FieldElement& scale, const std::vector<Term>& terms) {
  const NumberField& k = scale.field();
  const BinaryForm g = f.in_field(k);
  std::vector<FieldElement> sum(static_cast<std::size_t>(g.degree()) + 1, k.zero());
  for (const auto& t : terms) {
    // (alpha x + beta y)^d expanded directly; ProjectivePoint would rescale.
    for (int j = 0; j <= g.degree(); ++j) {
      const FieldElement c = t.alpha.pow(g.degree() - j) * t.beta.pow(j) *
                             Rational(binomial(static_cast<unsigned>(g.degree()), static_cast<unsigned>(j)));
      sum[static_cast<std::size_t>(j)] = sum[static_cast<std::size_t>(j)] + t.coeff * c;
    }
  }
  for (int j = 0; j <= g.degree(); ++j)
    if (sum[static_cast<std::size_t>(j)] != scale * g.coeff(j)) return false;
  return true;
}

}  // namespace

std::vector<IdentityCheck> paper_identities() {
  std::vector<IdentityCheck> out;
  const BinaryForm p5 = paper_form("p5").form;
  const BinaryForm p6 = paper_form("p6").form;
  const BinaryForm p7 = paper_form("p7").form;

  {
    const NumberField k = NumberField::cyclotomic(4);
    const FieldElement one = k.one(), i = k.generator();
    const bool ok = identity_holds(p5, k.from_rational(Rational(4)),
                                   {{-one - i, one, i}, {one * Rational(2), one, -one}, {-one + i, one, -i}});
    out.push_back({"4*p5 = (-1-i)(x+iy)^5 + 2(x-y)^5 + (-1+i)(x-iy)^5", k.spec(), ok, ""});
  }
  {
    const NumberField k = NumberField::cyclotomic(3);
    const FieldElement one = k.one(), w = k.generator(), w2 = w * w;
    const FieldElement c = (w - w2).inverse();
    const bool ok = identity_holds(p5, one,
                                   {{one, one, k.zero()}, {-one, k.zero(), one}, {c * w2, one, w}, {-(c * w), one, w2}});
    out.push_back({"p5 = x^5 - y^5 + (w^2(x+wy)^5 - w(x+w^2y)^5)/(w-w^2)", k.spec(), ok, ""});
  }
  {
    const NumberField k = NumberField::cyclotomic(5);
    const FieldElement one = k.one(), z = k.generator();
    const FieldElement pre = one + z * Rational(2) + z.pow(2) * Rational(3) - z.pow(3);
    const FieldElement s = one + z + z.pow(2);
    const bool ok = identity_holds(p7, pre,
                                   {{z.pow(4), one, z},
                                    {-(z.pow(2) * s), one, z.pow(2)},
                                    {z * s, one, z.pow(3)},
                                    {-z, one, z.pow(4)}});
    out.push_back({"(1+2z+3z^2-z^3)*p7 = z^4(x+zy)^7 - z^2(1+z+z^2)(x+z^2y)^7 + z(1+z+z^2)(x+z^3y)^7 - z(x+z^4y)^7",
                   k.spec(), ok, ""});
  }
  {
    const NumberField k = NumberField::cyclotomic(4);
    const FieldElement one = k.one(), i = k.generator();
    const bool ok = identity_holds(p6, k.from_rational(Rational(4)),
                                   {{one, one, one}, {i, one, i}, {-one, one, -one}, {-i, one, -i}});
    out.push_back({"4*p6 = (x+y)^6 + i(x+iy)^6 - (x-y)^6 - i(x-iy)^6", k.spec(), ok, ""});
  }
  {
    const NumberField k = NumberField::cyclotomic(3);
    const FieldElement one = k.one(), w = k.generator();
    const FieldElement third = k.from_rational(Rational(1, 3));
    const bool ok = identity_holds(p6, one,
                                   {{third, one, one},
                                    {third, one, w},
                                    {third, one, w * w},
                                    {-one, one, k.zero()},
                                    {-one, k.zero(), one}});
    out.push_back({"p6 = ((x+y)^6 + (x+wy)^6 + (x+w^2y)^6 - 3x^6 - 3y^6)/3", k.spec(), ok, ""});
  }
  for (auto& c : out) c.detail = c.holds ? "holds exactly" : "FAILS exact expansion";
  return out;
}

std::complex<double> p7_prefactor_embedding() {
  const NumberField k = NumberField::cyclotomic(5);
  const FieldElement z = k.generator();
  return approximate(k.one() + z * Rational(2) + z.pow(2) * Rational(3) - z.pow(3));
}

bool ReproduceReport::all_pass() const {
  if (!prefactor_ok) return false;
  for (const auto& r : runs)
    if (!r.pass) return false;
  for (const auto& i : identities)
    if (!i.holds) return false;
  return true;
}

ReproduceReport reproduce_paper(const SearchBudget& budget) {
  ReproduceReport rep;
  for (const auto& fx : all_paper_fixtures()) {
    for (const auto& [spec, expected] : fx.expected) {
      const NumberField k = parse_field_spec(spec);
      RankReport r = rank(fx.form, k, budget);
      const bool pass = r.exact && r.upper == expected &&
                        (!r.certificate || check_certificate(*r.certificate, r.form).ok());
      rep.runs.push_back({fx.name, spec, expected, std::move(r), pass});
    }
  }
  rep.identities = paper_identities();
  const auto z = p7_prefactor_embedding();
  rep.prefactor_ok = std::abs(z - std::complex<double>(0, 4.2533)) < 1e-3;
  return rep;
}

std::string format_reproduce(const ReproduceReport& rep) {
  std::ostringstream os;
  for (const auto& r : rep.runs) {
    os << (r.pass ? "PASS" : "FAIL") << "  rank " << r.fixture << " over " << r.field << ": expected " << r.expected
       << ", got ";
    if (r.report.exact)
      os << r.report.upper;
    else
      os << "[" << r.report.lower << ", " << r.report.upper << "]";
    os << "\n";
  }
  for (const auto& i : rep.identities)
    os << (i.holds ? "PASS" : "FAIL") << "  identity over " << i.field << ": " << i.name << "\n";
  const auto z = p7_prefactor_embedding();
  std::ostringstream num;
  num.precision(6);
  num << std::fixed << z.real() << " + " << z.imag() << "i";
  os << (rep.prefactor_ok ? "PASS" : "FAIL") << "  prefactor 1+2z+3z^2-z^3 at zeta5 = " << num.str()
     << " (|. - 4.2533i| < 1e-3)\n";
  os << (rep.all_pass() ? "ALL PASS" : "SOME CHECKS FAILED") << "\n";
  return os.str();
}

}  // namespace waring
