#include "sheafforge/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace sheafforge {

using ordered_json = nlohmann::ordered_json;

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "PASS";
    case CheckStatus::kFail:
      return "FAIL";
    case CheckStatus::kInconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

bool Report::ok() const { return count(CheckStatus::kFail) == 0; }
int Report::exit_code() const { return ok() ? 0 : 1; }

std::size_t Report::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckRecord& c) { return c.status == s; }));
}

std::string report_json(const Report& r, bool scrub_timing) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = r.command;
  ordered_json checks = ordered_json::array();
  for (const CheckRecord& c : r.checks) {
    ordered_json e;
    e["id"] = c.id;
    e["anchor"] = c.anchor;
    e["status"] = status_name(c.status);
    e["detail"] = c.detail;
    e["ms"] = scrub_timing ? 0.0 : c.millis;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["summary"] = {{"pass", r.count(CheckStatus::kPass)},
                  {"fail", r.count(CheckStatus::kFail)},
                  {"inconclusive", r.count(CheckStatus::kInconclusive)}};
  j["timing"] = {{"total_ms", scrub_timing ? 0.0 : r.total_millis}};
  return j.dump(2) + "\n";
}

std::string report_markdown(const Report& r) {
  std::ostringstream os;
  os << "# " << r.command << "\n\n";
  os << "| anchor | check | status | detail |\n|---|---|---|---|\n";
  for (const CheckRecord& c : r.checks) {
    std::string detail = c.detail;
    std::replace(detail.begin(), detail.end(), '|', '/');
    std::replace(detail.begin(), detail.end(), '\n', ' ');
    os << "| " << c.anchor << " | " << c.id << " | " << status_name(c.status) << " | " << detail << " |\n";
  }
  os << "\n" << r.count(CheckStatus::kPass) << " passed, " << r.count(CheckStatus::kFail) << " failed, "
     << r.count(CheckStatus::kInconclusive) << " inconclusive";
  os << " (" << static_cast<long>(r.total_millis) << " ms)\n";
  return os.str();
}

namespace {

std::vector<std::string> ideal_strings(const Ideal& i) {
  std::vector<std::string> out;
  for (const Polynomial& g : i.reduced_generators()) out.push_back(i.ring()->format(g));
  return out;
}

std::string joined(const std::vector<std::string>& xs) {
  std::string s;
  for (const std::string& x : xs) s += (s.empty() ? "" : ", ") + x;
  return s;
}

}  // namespace

std::string classify_json(const ClassifyReport& c) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["rank"] = c.rank;
  j["corank_at_point"] = c.corank_at_point;
  j["min_generators_at_point"] = c.min_generators_at_point;
  j["singular_locus"] = ideal_strings(c.singular_locus);
  j["sing_codim"] = c.sing_codim;
  j["is_torsion_free"] = c.is_torsion_free;
  j["hom_dim_le_1"] = c.hom_dim_le_1;
  j["hypotheses_hold"] = c.hypotheses_hold;
  j["thm12_consistent"] = c.thm12_consistent ? ordered_json(*c.thm12_consistent) : ordered_json(nullptr);
  j["notes"] = c.notes;
  return j.dump(2) + "\n";
}

std::string classify_text(const ClassifyReport& c) {
  std::ostringstream os;
  os << "rank:                    " << c.rank << "\n"
     << "corank at point:         " << c.corank_at_point << "\n"
     << "min generators at point: " << c.min_generators_at_point << "\n"
     << "singular locus:          (" << joined(ideal_strings(c.singular_locus)) << ")\n"
     << "codim of singular locus: " << c.sing_codim << "\n"
     << "torsion-free:            " << (c.is_torsion_free ? "yes" : "no") << "\n"
     << "hom-dim <= 1:            " << (c.hom_dim_le_1 ? "yes" : "no") << (c.hom_dim_conclusive ? "" : " (not certified)")
     << "\n"
     << "hypotheses hold:         " << (c.hypotheses_hold ? "yes" : "no") << "\n"
     << "biconditional:           "
     << (c.thm12_consistent ? (*c.thm12_consistent ? "consistent" : "VIOLATED") : "not asserted") << "\n";
  for (const std::string& n : c.notes) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace sheafforge
