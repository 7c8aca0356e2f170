#ifndef WARING_REPORT_JSON_HPP
#define WARING_REPORT_JSON_HPP

#include <waring/sylvester.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace waring {

inline constexpr const char* kReportSchema = "waring-rank/1";

nlohmann::json element_to_json(const FieldElement& a);
FieldElement element_from_json(const NumberField& k, const nlohmann::json& j);

nlohmann::json certificate_to_json(const SylvesterCertificate& cert);
SylvesterCertificate certificate_from_json(const nlohmann::json& j);

/// RankReportJson; the numeric block (double embeddings) only on request.
nlohmann::json report_to_json(const RankReport& report, bool numeric = false);

struct VerifyOutcome {
  bool ok = false;
  std::vector<std::string> failures;
};

/// Re-checks a RankReportJson document exactly: certificate invariants, the
/// recorded checks, and the consistency of the rank fields.
VerifyOutcome verify_report_json(const nlohmann::json& doc);

}  // namespace waring

#endif
