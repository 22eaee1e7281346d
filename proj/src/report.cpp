#include "kahler/report.hpp"

#include <sstream>
#include <utility>

namespace kahler {

std::string to_string(ReportStatus status) {
  switch (status) {
    case ReportStatus::Ok: return "ok";
    case ReportStatus::CapExceeded: return "cap_exceeded";
    case ReportStatus::BudgetExceeded: return "budget_exceeded";
  }
  return "ok";
}

VerificationReport::VerificationReport(std::string construction) : construction_(std::move(construction)) {}

Claim& VerificationReport::add(std::string label, std::string anchor, bool pass, Json witness) {
  claims_.push_back(Claim{std::move(label), std::move(anchor), pass, std::move(witness)});
  return claims_.back();
}

void VerificationReport::absorb(const VerificationReport& other, const std::string& prefix) {
  for (const auto& c : other.claims_) claims_.push_back(Claim{prefix + ": " + c.label, c.anchor, c.pass, c.witness});
}

void VerificationReport::set_status(ReportStatus s, std::string note) {
  status_ = s;
  status_note_ = std::move(note);
}

bool VerificationReport::pass() const {
  for (const auto& c : claims_)
    if (!c.pass) return false;
  return true;
}

int VerificationReport::exit_code() const {
  if (!pass()) return 1;
  return status_ == ReportStatus::Ok ? 0 : 3;
}

Json VerificationReport::to_json(bool timing) const {
  Json claims = Json::array();
  for (const auto& c : claims_)
    claims.push_back(Json{{"label", c.label}, {"anchor", c.anchor}, {"pass", c.pass}, {"witness", c.witness}});
  Json out{{"construction", construction_}, {"params", params_}, {"claims", std::move(claims)}, {"pass", pass()}};
  out["status"] = to_string(status_);
  if (!status_note_.empty()) out["status_note"] = status_note_;
  out["elapsed_ms"] = timing ? elapsed_ms_ : 0;
  return out;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << construction_;
  if (!params_.empty()) out << ' ' << params_.dump();
  out << '\n';
  for (const auto& c : claims_) {
    out << (c.pass ? "  PASS  " : "  FAIL  ") << c.label << "  [" << c.anchor << "]";
    if (!c.witness.empty()) out << "  " << c.witness.dump();
    out << '\n';
  }
  if (status_ != ReportStatus::Ok) out << "  status: " << to_string(status_) << " (" << status_note_ << ")\n";
  out << (pass() ? "pass" : "FAIL") << '\n';
  return out.str();
}

}  // namespace kahler
