#include <cstdio>
#include <string>
#include <vector>

#include "oddsym/verify.hpp"

using namespace oddsym;

struct Criterion {
  int id;
  std::string suite;
  int max_ell, max_degree;
  double limit;  // seconds
};

int main() {
  // max_degree for onh is a q-degree: 20 covers polynomials of degree 10
  std::vector<Criterion> cs = {
      {1, "qpi", -1, 8, 5},         {2, "osym", -1, 12, 120}, {3, "onh", 4, 20, 180},  {4, "oh", -1, -1, 180},
      {5, "bimod", 4, -1, 300},     {6, "rouquier", 4, -1, 600}, {7, "uqpi", 10, -1, 5},
  };
  int failed = 0;
  for (auto& c : cs) {
    Bounds b;
    b.max_ell = c.max_ell;
    b.max_degree = c.max_degree;
    SuiteReport r = run_suite(c.suite, b);
    bool ok = r.ok() && r.seconds < c.limit;
    std::printf("Criterion %d: %s (%s, %.2f s)\n", c.id, ok ? "PASS" : "FAIL", c.suite.c_str(), r.seconds);
    for (auto& k : r.checks)
      if (!k.ok) std::printf("  %s: %s\n", k.name.c_str(), k.witness.c_str());
    if (r.seconds >= c.limit) std::printf("  over the %.0f s limit\n", c.limit);
    failed += !ok;
  }
  return failed ? 1 : 0;
}
