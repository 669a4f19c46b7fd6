#include "wplat/report.hpp"

#include <json.hpp>

namespace wplat {

namespace {

nlohmann::ordered_json as_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["status"] = to_string(r.status);
  j["witnesses"] = r.witnesses;
  return j;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Warn: return "warn";
    case Status::Fail: return "fail";
  }
  return "fail";
}

std::string to_json(const CheckReport& r) { return as_json(r).dump(); }

std::string to_json(const std::vector<CheckReport>& rs) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) arr.push_back(as_json(r));
  return arr.dump(2);
}

}  // namespace wplat
