#pragma once

// Structured outcome of a construction: named claims with witness data,
// serialized to a fixed JSON shape.

#include "json.hpp"

#include <string>
#include <vector>

namespace kahler {

using Json = nlohmann::ordered_json;

struct Claim {
  std::string label;
  // Stable identifier of the statement being checked, e.g. "gabber.B.ii".
  std::string anchor;
  bool pass = false;
  Json witness;
};

enum class ReportStatus { Ok, CapExceeded, BudgetExceeded };

std::string to_string(ReportStatus status);

class VerificationReport {
 public:
  explicit VerificationReport(std::string construction = {});

  const std::string& construction() const { return construction_; }
  Json& params() { return params_; }
  const Json& params() const { return params_; }
  const std::vector<Claim>& claims() const { return claims_; }
  ReportStatus status() const { return status_; }
  long elapsed_ms() const { return elapsed_ms_; }

  Claim& add(std::string label, std::string anchor, bool pass, Json witness = Json::object());
  // Appends another report's claims with "prefix: " on each label.
  void absorb(const VerificationReport& other, const std::string& prefix);
  void set_status(ReportStatus s, std::string note);
  void set_elapsed_ms(long ms) { elapsed_ms_ = ms; }

  // All claims true. Independent of the status.
  bool pass() const;
  // 0 all pass, 1 some claim failed, 3 a cap or budget stopped the run.
  int exit_code() const;

  // elapsed_ms is written as 0 unless `timing`.
  Json to_json(bool timing = true) const;
  std::string to_text() const;

 private:
  std::string construction_;
  Json params_ = Json::object();
  std::vector<Claim> claims_;
  ReportStatus status_ = ReportStatus::Ok;
  std::string status_note_;
  long elapsed_ms_ = 0;
};

}  // namespace kahler
