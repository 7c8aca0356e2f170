#include "support.hpp"

#include <waring/expression.hpp>
#include <waring/oracles.hpp>

#include <doctest.h>

#include <algorithm>

using namespace waring;
using namespace waring::testing;

TEST_CASE("stufe of imaginary quadratic fields") {
  CHECK(stufe_imag_quadratic(1) == 1);
  CHECK(stufe_imag_quadratic(2) == 2);
  CHECK(stufe_imag_quadratic(3) == 2);
  CHECK(stufe_imag_quadratic(7) == 4);
  CHECK(stufe_imag_quadratic(15) == 4);
  CHECK(stufe_imag_quadratic(23) == 4);
  CHECK_THROWS_AS(stufe_imag_quadratic(4), std::invalid_argument);
  CHECK_THROWS_AS(stufe_imag_quadratic(0), std::invalid_argument);
}

TEST_CASE("two squares: known witnesses") {
  auto w1 = solve_minus_one_two_squares(1);
  REQUIRE(w1);
  const NumberField qi = NumberField::quadratic(-1);
  CHECK(w1->first == qi.from_rational(Rational(3, 4)));
  CHECK(w1->second == qi.generator() * Rational(5, 4));

  auto w2 = solve_minus_one_two_squares(2);
  REQUIRE(w2);
  const NumberField q2 = NumberField::quadratic(-2);
  CHECK(w2->first == q2.from_rational(Rational(7)));
  CHECK(w2->second == q2.generator() * Rational(5));

  CHECK_FALSE(solve_minus_one_two_squares(7));
  CHECK_FALSE(solve_minus_one_two_squares(15));
  CHECK_THROWS_AS(solve_minus_one_two_squares(NumberField::quadratic(5)), std::invalid_argument);
}

TEST_CASE("two squares: solutions exist exactly off 7 mod 8") {
  for (long m = 1; m <= 30; ++m) {
    if (!is_squarefree_integer(m)) continue;
    CAPTURE(m);
    auto w = solve_minus_one_two_squares(m);
    CHECK(w.has_value() == (m % 8 != 7));
    if (!w) continue;
    const auto& r = w->first;
    const auto& s = w->second;
    CHECK((r * r + s * s).is_zero() == false);
    CHECK(r * r + s * s == r.field().from_rational(Rational(-1)));
    CHECK_FALSE((r * s * (r * r - s * s)).is_zero());

    auto tu = solve_minus_two_two_squares(m);
    REQUIRE(tu);
    const auto& t = tu->first;
    const auto& u = tu->second;
    CHECK(t * t + u * u == t.field().from_rational(Rational(-2)));
    CHECK_FALSE((t * u * (t * t - u * u)).is_zero());
    auto back = minus_two_to_minus_one(*tu);
    CHECK(back.first == r);
    CHECK(back.second == s);
  }
}

TEST_CASE("two squares over cyclotomic presentations") {
  for (long n : {3L, 4L, 6L}) {
    CAPTURE(n);
    const NumberField k = NumberField::cyclotomic(n);
    auto w = solve_minus_one_two_squares(k);
    REQUIRE(w);
    CHECK(w->first * w->first + w->second * w->second == k.from_rational(Rational(-1)));
  }
}

TEST_CASE("quartic system e1 = e2 = 0") {
  const NumberField q2 = NumberField::quadratic(-2);
  auto sol = solve_dioph_quartic(q2);
  REQUIRE(sol);
  CHECK(sol->generic_degenerate);
  const FieldElement g = q2.generator();
  std::vector<FieldElement> want = {g * Rational(5) + q2.from_rational(Rational(6)),
                                    g * Rational(5) - q2.from_rational(Rational(6)),
                                    -g * Rational(5) + q2.from_rational(Rational(8)),
                                    -g * Rational(5) - q2.from_rational(Rational(8))};
  for (const auto& w : want)
    CHECK(std::find(sol->r.begin(), sol->r.end(), w) != sol->r.end());

  for (long m : {1L, 3L, 5L, 6L, 10L}) {
    CAPTURE(m);
    const NumberField k = NumberField::quadratic(-m);
    auto s = solve_dioph_quartic(k);
    REQUIRE(s);
    CHECK_FALSE(s->generic_degenerate);
    FieldElement e1 = k.zero(), e2 = k.zero();
    for (int i = 0; i < 4; ++i) {
      e1 = e1 + s->r[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < 4; ++j) {
        e2 = e2 + s->r[static_cast<std::size_t>(i)] * s->r[static_cast<std::size_t>(j)];
        CHECK(s->r[static_cast<std::size_t>(i)] != s->r[static_cast<std::size_t>(j)]);
      }
    }
    CHECK(e1.is_zero());
    CHECK(e2.is_zero());
  }
  CHECK_FALSE(solve_dioph_quartic(NumberField::quadratic(-7)));
}

TEST_CASE("stufe evidence") {
  CHECK(stufe_at_most_two(NumberField::rationals()).verdict == StufeVerdict::AboveTwo);
  CHECK(stufe_at_most_two(NumberField::quadratic(3)).verdict == StufeVerdict::AboveTwo);
  CHECK(stufe_at_most_two(NumberField::real_closure()).verdict == StufeVerdict::AboveTwo);
  CHECK(stufe_at_most_two(NumberField::quadratic(-7)).verdict == StufeVerdict::AboveTwo);
  auto e = stufe_at_most_two(NumberField::quadratic(-5));
  CHECK(e.verdict == StufeVerdict::AtMostTwo);
  CHECK(e.witness.has_value());
  auto z8 = stufe_at_most_two(NumberField::cyclotomic(8));
  CHECK(z8.verdict == StufeVerdict::AtMostTwo);
  REQUIRE(z8.witness);
  CHECK(z8.witness->first * z8.witness->first + z8.witness->second * z8.witness->second ==
        NumberField::cyclotomic(8).from_rational(Rational(-1)));
  CHECK(stufe_at_most_two(NumberField::cyclotomic(5)).verdict == StufeVerdict::Unknown);
}

TEST_CASE("paper fixtures") {
  CHECK(paper_form("p5").form == parse_form_expr("10x^3y^2 - 10x^2y^3"));
  CHECK(paper_form("p6").form == parse_form_expr("20x^3y^3"));
  CHECK(paper_form("p7").form == parse_form_expr("35x^4y^3 - 35x^3y^4"));
  CHECK(paper_form("phi").form == parse_form_expr("3x^5 - 20x^3y^2 + 10xy^4"));
  CHECK(paper_form("monomial_x3y2").form == parse_form_expr("10x^3y^2"));
  CHECK(paper_form("sextic").form == parse_form_expr("6x^5y - 20x^3y^3"));
  CHECK(paper_form("p2k", 5).form == parse_form_expr("252x^5y^5"));
  CHECK_THROWS_AS(paper_form("p2k", 2), std::invalid_argument);
  CHECK_THROWS_AS(paper_form("p2k1", 1), std::invalid_argument);
  CHECK_THROWS_AS(paper_form("nope"), std::invalid_argument);
  CHECK(all_paper_fixtures().size() == 9);
}

TEST_CASE("expected rank oracle") {
  const auto p5 = paper_form("p5");
  CHECK(expected_rank_oracle(p5, "Q(zeta4)") == 3);
  CHECK(expected_rank_oracle(p5, "Q(i)") == 3);
  CHECK(expected_rank_oracle(p5, "Q(zeta3)") == 4);
  CHECK(expected_rank_oracle(p5, "R") == 5);
  CHECK(expected_rank_oracle(p5, "Q(zeta8)") == 3);
  CHECK(expected_rank_oracle(p5, "Q(zeta5)") == std::nullopt);
  const auto p7 = paper_form("p7");
  CHECK(expected_rank_oracle(p7, "Q(zeta5)") == 4);
  CHECK(expected_rank_oracle(p7, "Q(zeta10)") == 4);
  CHECK(expected_rank_oracle(p7, "Q(zeta4)") == 5);
  const auto p6 = paper_form("p6");
  CHECK(expected_rank_oracle(p6, "Q(zeta4)") == 4);
  CHECK(expected_rank_oracle(p6, "Q(zeta3)") == 5);
  CHECK(expected_rank_oracle(p6, "R") == 6);
  const auto sextic = paper_form("sextic");
  CHECK(expected_rank_oracle(sextic, "Q(sqrt-5)") == 4);
  CHECK(expected_rank_oracle(sextic, "Q(sqrt-13)") == 4);
  CHECK(expected_rank_oracle(sextic, "Q(sqrt-7)") == 5);
  CHECK(expected_rank_oracle(sextic, "Q(sqrt-15)") == std::nullopt);
  CHECK(expected_rank_oracle(sextic, "R") == 6);
  const auto mono = paper_form("monomial_x3y2");
  CHECK(expected_rank_oracle(mono, "Q(sqrt-15)") == 5);
  CHECK(expected_rank_oracle(mono, "Q") == 5);
  const auto phi = paper_form("phi");
  CHECK(expected_rank_oracle(phi, "Q(zeta4)") == 3);
  CHECK(expected_rank_oracle(phi, "Q(sqrt-2)") == std::nullopt);
}
