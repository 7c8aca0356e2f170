#include "cli.hpp"

#include <waring/expression.hpp>
#include <waring/oracles.hpp>
#include <waring/report_json.hpp>
#include <waring/reproduce.hpp>
#include <waring/sylvester.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace waring::cli {

namespace {

std::string power_term(const ProjectivePoint& p, int d) {
  std::ostringstream os;
  os << "(";
  const bool a0 = p.alpha().is_zero();
  if (!a0) os << (p.alpha().is_one() ? "" : "(" + p.alpha().to_string() + ")*") << "x";
  if (!p.beta().is_zero()) {
    if (!a0) os << " + ";
    os << (p.beta().is_one() ? "" : "(" + p.beta().to_string() + ")*") << "y";
  }
  os << ")^" << d;
  return os.str();
}

void print_certificate(std::ostream& out, const SylvesterCertificate& c, int d) {
  out << "sylvester form: " << c.h.to_string() << "\n";
  out << "decomposition over " << c.field().spec() << ":\n";
  for (int i = 0; i < c.length(); ++i) {
    out << "  " << (i ? "+ " : "  ") << "(" << c.lambdas[static_cast<std::size_t>(i)].to_string() << ")*"
        << power_term(c.points[static_cast<std::size_t>(i)], d) << "\n";
  }
}

void print_report(std::ostream& out, const RankReport& r) {
  out << "form: " << r.form.to_string() << "\n";
  out << "field: " << r.field.spec() << "\n";
  if (r.exact)
    out << "rank: " << r.upper << " (exact)\n";
  else
    out << "rank: between " << r.lower << " and " << r.upper << "\n";
  if (r.certificate) print_certificate(out, *r.certificate, r.form.degree());
  if (r.witness && !r.certificate) out << "witness: " << r.witness->to_string() << "\n";
  for (const auto& e : r.evidence)
    out << "  r=" << e.r << " " << e.kind << (e.definitive ? " [definitive]" : "") << ": " << e.detail << "\n";
}

SearchBudget budget_from(int height, long long max_candidates) {
  SearchBudget b;
  if (height < 0) throw std::invalid_argument("--height must be non-negative");
  if (max_candidates < 1) throw std::invalid_argument("--max-candidates must be positive");
  b.height = height;
  b.max_candidates = static_cast<std::uint64_t>(max_candidates);
  return b;
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relative Waring rank of binary forms over number fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "waring 1.0");

  std::string form_text, field_text = "Q", sylvester_text, file;
  int height = 8;
  long long max_candidates = 20000;
  bool json_out = false, numeric = false, witness = false;
  long m = 0, n = 0;

  auto* rank_cmd = app.add_subcommand("rank", "Compute L_K(f) with a certificate");
  rank_cmd->add_option("form", form_text, "Binary form, e.g. \"10x^3y^2 - 10x^2y^3\"")->required();
  rank_cmd->add_option("--field", field_text, "Q, Q(i), Q(zeta<n>), Q(sqrt<d>), R or C")->required();
  rank_cmd->add_option("--height", height, "Grid height for nullspace searches")->capture_default_str();
  rank_cmd->add_option("--max-candidates", max_candidates, "Candidates per degree")->capture_default_str();
  rank_cmd->add_flag("--json", json_out, "Emit waring-rank/1 JSON");
  rank_cmd->add_flag("--numeric", numeric, "Add a numeric block to the JSON");

  auto* dec_cmd = app.add_subcommand("decompose", "Power-sum decomposition from a Sylvester form");
  dec_cmd->add_option("form", form_text, "Binary form")->required();
  dec_cmd->add_option("--field", field_text, "Field spec")->required();
  dec_cmd->add_option("--sylvester", sylvester_text, "Sylvester form to use (default: from rank)");
  dec_cmd->add_option("--height", height, "Grid height")->capture_default_str();
  dec_cmd->add_option("--max-candidates", max_candidates, "Candidates per degree")->capture_default_str();
  dec_cmd->add_flag("--json", json_out, "Emit the certificate as JSON");

  auto* ver_cmd = app.add_subcommand("verify", "Re-check a waring-rank/1 JSON document");
  ver_cmd->add_option("file", file, "JSON file, or - for stdin")->required();

  auto* ideal_cmd = app.add_subcommand("apolar-ideal", "Generators of the apolar ideal");
  ideal_cmd->add_option("form", form_text, "Binary form")->required();

  auto* stufe_cmd = app.add_subcommand("stufe", "Stufe of Q(sqrt -m)");
  stufe_cmd->add_option("m", m, "Square-free m >= 1")->required();
  stufe_cmd->add_flag("--witness", witness, "Also print r, s with r^2 + s^2 = -1");

  auto* cyc_cmd = app.add_subcommand("cyclo-member", "Is zeta_m in Q(zeta_n)?");
  cyc_cmd->add_option("m", m, "m >= 1")->required();
  cyc_cmd->add_option("n", n, "n >= 1")->required();

  auto* rep_cmd = app.add_subcommand("reproduce-paper", "Run every fixture and identity");
  rep_cmd->add_option("--height", height, "Grid height")->capture_default_str();
  rep_cmd->add_flag("--json", json_out, "Emit JSON");

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  if (!args.empty()) args.pop_back();
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << "waring 1.0\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (*rank_cmd) {
      const BinaryForm f = parse_form_expr(form_text);
      const NumberField k = parse_field_spec(field_text);
      const RankReport r = rank(f, k, budget_from(height, max_candidates));
      if (json_out)
        out << report_to_json(r, numeric).dump(2) << "\n";
      else
        print_report(out, r);
      return r.exact ? kOk : kBudget;
    }
    if (*dec_cmd) {
      const BinaryForm f = parse_form_expr(form_text);
      const NumberField k = parse_field_spec(field_text);
      if (k.is_closure()) throw std::invalid_argument("decompose needs a number field");
      std::optional<SylvesterCertificate> cert;
      if (!sylvester_text.empty()) {
        cert = certificate_from_form(f, parse_form_expr(sylvester_text), k);
        if (!cert) {
          err << sylvester_text << " is not a square-free apolar form splitting over " << k.spec() << "\n";
          return kVerifyFailed;
        }
      } else {
        cert = rank(f, k, budget_from(height, max_candidates)).certificate;
      }
      if (json_out)
        out << certificate_to_json(*cert).dump(2) << "\n";
      else
        print_certificate(out, *cert, f.degree());
      return kOk;
    }
    if (*ver_cmd) {
      std::string text;
      if (file == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
      } else {
        std::ifstream in(file);
        if (!in) {
          err << "cannot open " << file << "\n";
          return kUsage;
        }
        text.assign(std::istreambuf_iterator<char>(in), {});
      }
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(text);
      } catch (const nlohmann::json::exception& e) {
        err << "invalid JSON: " << e.what() << "\n";
        return kUsage;
      }
      const VerifyOutcome v = verify_report_json(doc);
      if (v.ok) {
        out << "OK\n";
        return kOk;
      }
      for (const auto& why : v.failures) out << "FAIL: " << why << "\n";
      return kVerifyFailed;
    }
    if (*ideal_cmd) {
      const auto [g1, g2] = apolar_ideal_generators(parse_form_expr(form_text));
      out << g1.to_string() << "\n" << g2.to_string() << "\n";
      return kOk;
    }
    if (*stufe_cmd) {
      out << stufe_imag_quadratic(m) << "\n";
      if (witness) {
        if (auto w = solve_minus_one_two_squares(m))
          out << "r = " << w->first.to_string() << "\ns = " << w->second.to_string() << "\n";
        else
          out << "no r, s with r^2 + s^2 = -1 and rs(r^2 - s^2) != 0\n";
      }
      return kOk;
    }
    if (*cyc_cmd) {
      if (m < 1 || n < 1) throw std::invalid_argument("cyclo-member needs m, n >= 1");
      out << (cyclotomic_member(m, n) ? "yes" : "no") << "\n";
      return kOk;
    }
    if (*rep_cmd) {
      SearchBudget b;
      b.height = height;
      const ReproduceReport rep = reproduce_paper(b);
      if (json_out) {
        nlohmann::json doc;
        doc["runs"] = nlohmann::json::array();
        for (const auto& r : rep.runs)
          doc["runs"].push_back({{"fixture", r.fixture}, {"field", r.field}, {"expected", r.expected},
                                 {"pass", r.pass}, {"report", report_to_json(r.report)}});
        doc["identities"] = nlohmann::json::array();
        for (const auto& i : rep.identities)
          doc["identities"].push_back({{"name", i.name}, {"field", i.field}, {"holds", i.holds}});
        doc["prefactor_ok"] = rep.prefactor_ok;
        doc["all_pass"] = rep.all_pass();
        out << doc.dump(2) << "\n";
      } else {
        out << format_reproduce(rep);
      }
      return rep.all_pass() ? kOk : kVerifyFailed;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InhomogeneousError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace waring::cli
