#include "support.hpp"

#include <cli.hpp>
#include <waring/expression.hpp>
#include <waring/oracles.hpp>
#include <waring/report_json.hpp>
#include <waring/reproduce.hpp>
#include <waring/sylvester.hpp>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace waring;
using namespace waring::testing;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "waring");
  std::ostringstream out, err;
  const int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::filesystem::path kFixtures = WARING_FIXTURE_DIR;

}  // namespace

TEST_CASE("form parser examples") {
  const auto f = parse_form_expr("10x^3y^2 - 10x^2y^3");
  CHECK(f.degree() == 5);
  CHECK(f.coeff(2).rational_value() == 10);
  CHECK(f.coeff(3).rational_value() == -10);
  CHECK(parse_form_expr("3*x^5 - 20*x^3*y^2 + 10*x*y^4") == paper_form("phi").form);
  CHECK(parse_form_expr("x y") == parse_form_expr("xy"));
  CHECK(parse_form_expr("-1/2 x^2 + y^2").coeff(0).rational_value() == make_rational(-1, 2));
  CHECK(parse_form_expr("x^2 + x^2 - y^2").coeff(0).rational_value() == 2);
  CHECK(parse_form_expr("7").degree() == 0);
}

TEST_CASE("form parser errors") {
  CHECK_THROWS_AS(parse_form_expr("x^2 + y^3"), InhomogeneousError);
  try {
    parse_form_expr("x^2 + y^3");
  } catch (const InhomogeneousError& e) {
    CHECK(e.offsets() == std::vector<std::size_t>{4});
  }
  CHECK_THROWS_AS(parse_form_expr("x^2 - x^2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_form_expr(""), ParseError);
  CHECK_THROWS_AS(parse_form_expr("x^"), ParseError);
  CHECK_THROWS_AS(parse_form_expr("2/0 x"), ParseError);
  try {
    parse_form_expr("x + z");
    FAIL("accepted z");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("form round trip through to_string") {
  std::mt19937 rng(7001);
  std::uniform_int_distribution<int> deg(0, 9);
  for (int i = 0; i < 200; ++i) {
    const auto f = random_form(rng, NumberField::rationals(), deg(rng));
    INFO(f.to_string());
    CHECK(parse_form_expr(f.to_string()) == f);
  }
}

TEST_CASE("field specs") {
  CHECK(parse_field_spec("Q") == NumberField::rationals());
  CHECK(parse_field_spec("Q(i)") == NumberField::quadratic(-1));
  CHECK(parse_field_spec("Q(zeta5)") == NumberField::cyclotomic(5));
  CHECK(parse_field_spec("Q(sqrt-7)") == NumberField::quadratic(-7));
  CHECK(parse_field_spec("Q(sqrt(-7))") == NumberField::quadratic(-7));
  CHECK(parse_field_spec("R").kind() == NumberField::Kind::RealClosure);
  CHECK(parse_field_spec("C").kind() == NumberField::Kind::ComplexClosure);
  CHECK_THROWS_AS(parse_field_spec("Q(sqrt4)"), ParseError);
  CHECK_THROWS_AS(parse_field_spec("Q(zeta0)"), ParseError);
  CHECK_THROWS_AS(parse_field_spec("F7"), ParseError);
  for (const auto& s : {"Q", "Q(i)", "Q(zeta3)", "Q(zeta12)", "Q(sqrt-2)", "Q(sqrt5)", "R", "C"})
    CHECK(parse_field_spec(parse_field_spec(s).spec()) == parse_field_spec(s));
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"rank", "x^2 + y^3", "--field", "Q"}).code == cli::kUsage);
  CHECK(run({"rank", "x^2", "--field", "Q(zeta0)"}).code == cli::kUsage);
  CHECK(run({"rank", "x^2 + y^2", "--field", "Q(i)"}).code == cli::kOk);
  CHECK(run({"verify", "/nonexistent/file.json"}).code == cli::kUsage);
  auto tiny = run({"rank", "6x^5y - 20x^3y^3", "--field", "Q(sqrt-15)", "--height", "1", "--max-candidates", "5"});
  CHECK(tiny.code == cli::kBudget);
  CHECK(tiny.out.find("between") != std::string::npos);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("stufe and cyclo-member commands") {
  CHECK(run({"stufe", "7"}).out == "4\n");
  CHECK(run({"stufe", "1"}).out == "1\n");
  CHECK(run({"stufe", "2"}).out == "2\n");
  CHECK(run({"stufe", "4"}).code == cli::kUsage);
  CHECK(run({"cyclo-member", "3", "6"}).out == "yes\n");
  CHECK(run({"cyclo-member", "6", "3"}).out == "yes\n");
  CHECK(run({"cyclo-member", "4", "6"}).out == "no\n");
}

TEST_CASE("apolar-ideal command") {
  CHECK(run({"apolar-ideal", "20x^3y^3"}).out == "x^4\ny^4\n");
  CHECK(run({"apolar-ideal", "6x^5y - 20x^3y^3"}).out == "x^4 + x^2*y^2\ny^4\n");
}

TEST_CASE("decompose with a given Sylvester form") {
  auto good = run({"decompose", "20x^3y^3", "--field", "Q(zeta3)", "--sylvester", "x^4y - xy^4"});
  CHECK(good.code == cli::kOk);
  CHECK(good.out.find("(1/3)*(x + (zeta3)*y)^6") != std::string::npos);
  CHECK(run({"decompose", "20x^3y^3", "--field", "Q(zeta3)", "--sylvester", "x^4 - y^4"}).code ==
        cli::kVerifyFailed);
  CHECK(run({"decompose", "20x^3y^3", "--field", "Q(zeta4)", "--sylvester", "x^4 - y^4"}).code == cli::kOk);
}

TEST_CASE("emitted reports verify; mutations are rejected") {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"10x^3y^2 - 10x^2y^3", "Q(zeta4)"}, {"10x^3y^2 - 10x^2y^3", "Q(zeta3)"},
      {"20x^3y^3", "Q(zeta4)"},            {"10x^3y^2", "Q(sqrt-7)"},
      {"3x^5 - 20x^3y^2 + 10xy^4", "R"},   {"10x^3y^2 - 10x^2y^3", "C"},
      {"x^4 + 6x^2y^2 + y^4", "Q"},        {"x^3 - 3xy^2", "Q(sqrt3)"}};
  std::mt19937 rng(7002);
  for (const auto& [form, field] : cases) {
    INFO(form << " over " << field);
    const auto r = run({"rank", form, "--field", field, "--json", "--numeric"});
    REQUIRE(r.code == cli::kOk);
    const json doc = json::parse(r.out);
    CHECK(doc["schema"] == kReportSchema);
    const auto ok = verify_report_json(doc);
    CHECK_MESSAGE(ok.ok, (ok.failures.empty() ? "" : ok.failures.front()));
    if (doc["certificate"].is_null()) continue;
    for (int trial = 0; trial < 6; ++trial) {
      json bad = doc;
      auto& lam = bad["certificate"]["lambdas"];
      std::uniform_int_distribution<std::size_t> pick(0, lam.size() - 1);
      auto& coord = lam[pick(rng)][0];
      coord = Rational(Rational(coord.get<std::string>()) + 1).get_str();
      CHECK_FALSE(verify_report_json(bad).ok);
    }
    json bad = doc;
    bad["rank"]["upper"] = doc["rank"]["upper"].get<int>() - 1;
    CHECK_FALSE(verify_report_json(bad).ok);
  }
}

TEST_CASE("golden fixtures") {
  struct Golden {
    std::string file;
    std::vector<std::string> args;
  };
  const std::vector<Golden> goldens = {
      {"rank_p5_zeta4.json", {"rank", "10x^3y^2 - 10x^2y^3", "--field", "Q(zeta4)", "--json"}},
      {"rank_p6_zeta3.json", {"rank", "20x^3y^3", "--field", "Q(zeta3)", "--json"}},
      {"rank_x3y2_sqrt-2.json", {"rank", "10x^3y^2", "--field", "Q(sqrt-2)", "--json"}},
      {"rank_x3y2_sqrt-7.json", {"rank", "10x^3y^2", "--field", "Q(sqrt-7)", "--json"}},
      {"rank_phi_R.json", {"rank", "3x^5 - 20x^3y^2 + 10xy^4", "--field", "R", "--json"}},
      {"rank_p5_C.json", {"rank", "10x^3y^2 - 10x^2y^3", "--field", "C", "--json", "--numeric"}},
      {"apolar_p5.txt", {"apolar-ideal", "10x^3y^2 - 10x^2y^3"}},
      {"reproduce_paper.txt", {"reproduce-paper"}},
  };
  for (const auto& g : goldens) {
    INFO(g.file);
    const auto r = run(g.args);
    CHECK(r.code == cli::kOk);
    CHECK(r.out == slurp(kFixtures / g.file));
    if (g.file.ends_with(".json")) {
      const auto v = verify_report_json(json::parse(slurp(kFixtures / g.file)));
      CHECK(v.ok);
    }
  }
}

TEST_CASE("published identities hold exactly") {
  const auto ids = paper_identities();
  CHECK(ids.size() == 5);
  for (const auto& i : ids) {
    INFO(i.name << ": " << i.detail);
    CHECK(i.holds);
  }
  const auto z = p7_prefactor_embedding();
  CHECK(std::abs(z - std::complex<double>(0, 4.2533)) < 1e-3);
}
