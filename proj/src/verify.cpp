#include "oddsym/verify.hpp"

#include <chrono>
#include <stdexcept>

namespace oddsym {

bool SuiteReport::ok() const {
  for (auto& c : checks)
    if (!c.ok) return false;
  return true;
}

nlohmann::json SuiteReport::to_json(bool timings) const {
  nlohmann::json j;
  j["suite"] = suite;
  j["ok"] = ok();
  j["checks"] = nlohmann::json::array();
  for (auto& c : checks) {
    nlohmann::json x{{"name", c.name}, {"ok", c.ok}, {"cases", c.cases}};
    if (!c.ok) x["witness"] = c.witness;
    j["checks"].push_back(x);
  }
  if (timings) j["seconds"] = seconds;
  return j;
}

std::vector<std::string> suite_names() { return {"qpi", "osym", "onh", "oh", "bimod", "rouquier", "uqpi"}; }

SuiteReport run_suite(const std::string& name, const Bounds& b) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport r;
  if (name == "qpi") r = verify_qpi(b);
  else if (name == "osym") r = verify_osym(b);
  else if (name == "onh") r = verify_onh(b);
  else if (name == "oh") r = verify_oh(b);
  else if (name == "bimod") r = verify_bimod(b);
  else if (name == "rouquier") r = verify_rouquier(b);
  else if (name == "uqpi") r = verify_uqpi(b);
  else throw std::invalid_argument("unknown suite: " + name);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}


}  // namespace oddsym
