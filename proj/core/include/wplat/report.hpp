#pragma once

#include <string>
#include <vector>

namespace wplat {

enum class Status { Pass, Warn, Fail };

std::string to_string(Status s);

/// Outcome of one verification; witnesses describe failures or findings.
struct CheckReport {
  std::string check;
  Status status = Status::Pass;
  std::vector<std::string> witnesses;

  void fail(std::string witness) {
    status = Status::Fail;
    witnesses.push_back(std::move(witness));
  }
  void warn(std::string witness) {
    if (status == Status::Pass) status = Status::Warn;
    witnesses.push_back(std::move(witness));
  }
  bool failed() const { return status == Status::Fail; }
};

/// {"check":..,"status":"pass|warn|fail","witnesses":[..]}
std::string to_json(const CheckReport& r);
/// JSON array of reports.
std::string to_json(const std::vector<CheckReport>& rs);

}  // namespace wplat
