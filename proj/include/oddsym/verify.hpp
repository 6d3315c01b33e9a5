#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace oddsym {

struct Check {
  Check() = default;
  explicit Check(std::string n) : name(std::move(n)) {}
  std::string name;
  bool ok = true;
  long cases = 0;
  std::string witness;
  void expect(bool cond, const std::function<std::string()>& why) {
    ++cases;
    if (!cond && ok) {
      ok = false;
      witness = why();
    }
  }
};

struct SuiteReport {
  SuiteReport() = default;
  explicit SuiteReport(std::string s) : suite(std::move(s)) {}
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0;
  bool ok() const;
  nlohmann::json to_json(bool timings) const;
};

struct Bounds {
  int max_ell = -1;     // -1: suite default
  int max_degree = -1;  // -1: suite default
  std::uint64_t seed = 1;
};

SuiteReport verify_qpi(const Bounds& b);
SuiteReport verify_osym(const Bounds& b);
SuiteReport verify_onh(const Bounds& b);
SuiteReport verify_oh(const Bounds& b);
SuiteReport verify_bimod(const Bounds& b);
SuiteReport verify_rouquier(const Bounds& b);
struct RouquierComplex;
SuiteReport verify_src(const RouquierComplex& c);  // checks for a single (ell, k)
SuiteReport verify_uqpi(const Bounds& b);
SuiteReport run_suite(const std::string& name, const Bounds& b);
std::vector<std::string> suite_names();

}  // namespace oddsym
