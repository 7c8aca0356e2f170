#include <waring/approx.hpp>
#include <waring/expression.hpp>
#include <waring/report_json.hpp>

#include <stdexcept>

namespace waring {

using nlohmann::json;

json element_to_json(const FieldElement& a) {
  json out = json::array();
  for (const auto& q : a.coords()) out.push_back(q.get_str());
  return out;
}

FieldElement element_from_json(const NumberField& k, const json& j) {
  if (!j.is_array() || static_cast<int>(j.size()) != k.degree())
    throw std::invalid_argument("element of " + k.spec() + " needs " + std::to_string(k.degree()) + " coordinates");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(parse_rational(x.get<std::string>()));
  return k.element(std::move(c));
}

namespace {

json form_coefficients(const BinaryForm& f) {
  json out = json::array();
  for (const auto& c : f.coefficients()) out.push_back(element_to_json(c));
  return out;
}

BinaryForm form_from_json(const NumberField& k, const json& j) {
  std::vector<FieldElement> c;
  for (const auto& x : j) c.push_back(element_from_json(k, x));
  if (c.empty()) throw std::invalid_argument("empty coefficient list");
  return BinaryForm(k, std::move(c));
}

bool is_real_mode(const NumberField& k) { return k.kind() == NumberField::Kind::RealClosure || (!k.is_closure() && k.is_real()); }

json evaluate_checks(const RankReport& rep) {
  json checks = json::object();
  if (rep.certificate) {
    const auto c = check_certificate(*rep.certificate, rep.form);
    checks["apolar"] = c.apolar;
    checks["splits"] = c.splits;
    checks["reconstruction"] = c.reconstruction;
    checks["honest"] = c.honest;
    const NumberField& cf = rep.certificate->field();
    if (is_real_mode(rep.field) && cf.is_real() && !is_dth_power(rep.form)) {
      const auto sc = sign_change_check(*rep.certificate, rep.form);
      checks["sign_change"] = {{"sigma", sc.sigma}, {"tau", sc.tau}, {"ok", sc.ok}};
    }
  }
  return checks;
}

}  // namespace

json certificate_to_json(const SylvesterCertificate& cert) {
  json points = json::array();
  for (const auto& p : cert.points) points.push_back(json::array({element_to_json(p.alpha()), element_to_json(p.beta())}));
  json lambdas = json::array();
  for (const auto& l : cert.lambdas) lambdas.push_back(element_to_json(l));
  return {{"field", cert.field().spec()},
          {"sylvester_form", cert.h.to_string()},
          {"sylvester_coefficients", form_coefficients(cert.h)},
          {"points", points},
          {"lambdas", lambdas}};
}

SylvesterCertificate certificate_from_json(const json& j) {
  const NumberField k = parse_field_spec(j.at("field").get<std::string>());
  if (k.is_closure()) throw std::invalid_argument("certificate field must be a number field");
  const BinaryForm h = form_from_json(k, j.at("sylvester_coefficients"));
  std::vector<ProjectivePoint> points;
  for (const auto& p : j.at("points")) {
    if (!p.is_array() || p.size() != 2) throw std::invalid_argument("point needs two coordinates");
    points.emplace_back(element_from_json(k, p[0]), element_from_json(k, p[1]));
  }
  std::vector<FieldElement> lambdas;
  for (const auto& l : j.at("lambdas")) lambdas.push_back(element_from_json(k, l));
  return {h, std::move(points), std::move(lambdas)};
}

json report_to_json(const RankReport& rep, bool numeric) {
  json doc;
  doc["schema"] = kReportSchema;
  doc["form"] = rep.form.to_string();
  doc["form_field"] = rep.form.field().spec();
  doc["form_coefficients"] = form_coefficients(rep.form);
  doc["degree"] = rep.form.degree();
  doc["field"] = rep.field.spec();
  doc["rank"] = {{"lower", rep.lower}, {"upper", rep.upper}, {"exact", rep.exact}};
  doc["certificate"] = rep.certificate ? certificate_to_json(*rep.certificate) : json(nullptr);
  doc["witness"] = rep.witness ? json(rep.witness->to_string()) : json(nullptr);
  if (rep.witness) doc["witness_coefficients"] = form_coefficients(*rep.witness);
  doc["checks"] = evaluate_checks(rep);
  json ev = json::array();
  for (const auto& e : rep.evidence)
    ev.push_back({{"r", e.r}, {"kind", e.kind}, {"detail", e.detail}, {"definitive", e.definitive}});
  doc["evidence"] = ev;
  doc["budget"] = {{"height", rep.budget.height}, {"max_candidates", rep.budget.max_candidates}};
  if (numeric && rep.certificate) {
    json pts = json::array();
    for (const auto& p : rep.certificate->points) {
      const auto a = approximate(p.alpha());
      const auto b = approximate(p.beta());
      pts.push_back({{a.real(), a.imag()}, {b.real(), b.imag()}});
    }
    json ls = json::array();
    for (const auto& l : rep.certificate->lambdas) {
      const auto z = approximate(l);
      ls.push_back({z.real(), z.imag()});
    }
    doc["numeric"] = {{"points", pts}, {"lambdas", ls}};
  }
  return doc;
}

VerifyOutcome verify_report_json(const json& doc) {
  VerifyOutcome out;
  auto fail = [&](const std::string& why) { out.failures.push_back(why); };
  try {
    if (doc.value("schema", "") != kReportSchema) fail("schema is not " + std::string(kReportSchema));
    const NumberField field = parse_field_spec(doc.at("field").get<std::string>());
    const NumberField form_field = parse_field_spec(doc.at("form_field").get<std::string>());
    const BinaryForm f = form_from_json(form_field, doc.at("form_coefficients"));
    if (f.is_rational() && doc.contains("form") &&
        parse_form_expr(doc.at("form").get<std::string>()) != f.in_field(NumberField::rationals()))
      fail("form string does not match its coefficients");
    const int d = f.degree();
    if (doc.at("degree").get<int>() != d) fail("degree field is wrong");
    const int lower = doc.at("rank").at("lower").get<int>();
    const int upper = doc.at("rank").at("upper").get<int>();
    const bool exact = doc.at("rank").at("exact").get<bool>();
    if (lower > upper) fail("lower bound exceeds upper bound");
    if (upper > d || upper < 1) fail("upper bound outside 1..d");
    if (exact != (lower == upper)) fail("exact flag inconsistent with bounds");

    const json& cj = doc.at("certificate");
    if (!cj.is_null()) {
      const SylvesterCertificate cert = certificate_from_json(cj);
      const NumberField& cf = cert.field();
      if (!field.is_closure() && cf != field && !cf.same_presentation(field)) fail("certificate field differs");
      if (field.kind() == NumberField::Kind::RealClosure && !cf.is_real()) fail("real certificate over a non-real field");
      if (cert.length() != upper) fail("certificate length differs from the upper bound");
      const auto c = check_certificate(cert, f);
      if (!c.apolar) fail("sylvester form is not apolar");
      if (!c.splits) fail("points do not factor the sylvester form");
      if (!c.reconstruction) fail("sum of powers does not reconstruct the form");
      if (!c.honest) fail("representation is not honest");
      const json& checks = doc.at("checks");
      if (checks.value("apolar", !c.apolar) != c.apolar || checks.value("splits", !c.splits) != c.splits ||
          checks.value("reconstruction", !c.reconstruction) != c.reconstruction ||
          checks.value("honest", !c.honest) != c.honest)
        fail("recorded checks disagree with recomputation");
      if (checks.contains("sign_change")) {
        const auto sc = sign_change_check(cert, f);
        const json& s = checks.at("sign_change");
        if (s.at("sigma").get<int>() != sc.sigma || s.at("tau").get<int>() != sc.tau || s.at("ok").get<bool>() != sc.ok)
          fail("recorded sign-change data disagree with recomputation");
      }
    } else if (!doc.at("witness").is_null()) {
      if (!field.is_closure()) fail("witness-only result over a number field");
      const BinaryForm w = form_from_json(NumberField::rationals(), doc.at("witness_coefficients"));
      if (w.degree() != upper) fail("witness degree differs from the upper bound");
      if (apolar_apply(w, f.in_field(NumberField::rationals()))) fail("witness is not apolar");
      if (!squarefree_test(w)) fail("witness is not square-free");
      if (field.kind() == NumberField::Kind::RealClosure &&
          real_distinct_root_count(w.dehomogenize()) + (w.y_multiplicity() > 0 ? 1 : 0) != w.degree())
        fail("witness does not have only real roots");
    } else {
      bool hyperbolic = false;
      for (const auto& e : doc.at("evidence"))
        if (e.value("kind", "") == "hyperbolic") hyperbolic = true;
      if (!(hyperbolic && field.kind() == NumberField::Kind::RealClosure && hyperbolic_test(f).is_hyperbolic &&
            upper == d))
        fail("no certificate, witness or hyperbolicity shortcut");
    }
  } catch (const std::exception& e) {
    fail(std::string("malformed document: ") + e.what());
  }
  out.ok = out.failures.empty();
  return out;
}

}  // namespace waring
