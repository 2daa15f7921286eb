// One line per acceptance criterion, each exercised at p = 3 and p = 5 with
// the default cap 2p^2 + 4p. Exits nonzero when any criterion fails.
#include "thhcalc/scenarios.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

using namespace thhcalc;

namespace {

using Clock = std::chrono::steady_clock;

struct Run {
  Report report;
  double seconds = 0;
};

std::map<std::pair<std::string, std::uint32_t>, Run> cache;

const Run& run(const std::string& name, std::uint32_t p) {
  auto key = std::make_pair(name, p);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  const auto t0 = Clock::now();
  Report r = run_scenario(name, p);
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  return cache.emplace(key, Run{std::move(r), s}).first->second;
}

/// Collects failure reasons for one criterion.
struct Verdict {
  std::vector<std::string> problems;

  // Every check whose name contains `needle` must have status `want`; at
  // least one such check must exist.
  void expect(const std::string& scenario, std::uint32_t p, const std::string& needle, Status want = Status::Pass) {
    const Report& r = run(scenario, p).report;
    int seen = 0;
    for (const auto& c : r.checks) {
      if (c.name.find(needle) == std::string::npos) continue;
      ++seen;
      if (c.status != want)
        problems.push_back(scenario + " p=" + std::to_string(p) + ": '" + c.name + "' is " +
                           std::string(to_string(c.status)));
    }
    if (seen == 0) problems.push_back(scenario + " p=" + std::to_string(p) + ": no check named '" + needle + "'");
  }
  void expect_clean(const std::string& scenario, std::uint32_t p) {
    const Report& r = run(scenario, p).report;
    if (!r.passed()) problems.push_back(scenario + " p=" + std::to_string(p) + " has failing checks");
    if (!r.warnings.empty()) problems.push_back(scenario + " p=" + std::to_string(p) + " warned: " + r.warnings.front());
  }
  void within(const std::string& what, double seconds, double limit) {
    if (seconds >= limit)
      problems.push_back(what + " took " + std::to_string(seconds) + " s, limit " + std::to_string(limit) + " s");
  }
};

struct Criterion {
  const char* id;
  const char* title;
  std::function<void(Verdict&)> body;
};

const std::uint32_t kPrimes[] = {3, 5};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "Z_(p): E2 oracle, d^p family, E-infinity dims", [](Verdict& v) {
         for (auto p : kPrimes) {
           v.expect_clean("thhz", p);
           v.expect("thhz", p, "E2 closed form equals resolution");
           v.expect("thhz", p, "d^p(gamma_k[dv])");
           v.expect("thhz", p, "E-infinity: dimensions");
           v.expect("thhz", p, "every single differential perturbation is detected");
         }
         v.within("thhz at p=5", run("thhz", 5).seconds, 10.0);
       }},
      {"AC2", "l with D(v): injective comparison maps, abutment with [dv]^p = mu2", [](Verdict& v) {
         for (auto p : kPrimes) {
           v.expect_clean("thh-ell-log", p);
           v.expect("thh-ell-log", p, "left comparison map is injective");
           v.expect("thh-ell-log", p, "right comparison map is injective");
           v.expect("thh-ell-log", p, "E-infinity:");
         }
       }},
      {"AC3", "ku with D(u): base change dims and dlogv -> -dlogu isomorphism", [](Verdict& v) {
         for (auto p : kPrimes) {
           v.expect_clean("thh-ku-basechange", p);
           v.expect("thh-ku-basechange", p, "convolved with THH(l, D(v)) equals the stated answer");
           v.expect("thh-ku-basechange", p, "dlogv -> -dlogu is an isomorphism");
         }
       }},
      {"AC4", "ku spectral sequence: E2, d^2, E3 = E-infinity, du*z = 0 excluded", [](Verdict& v) {
         for (auto p : kPrimes) {
           v.expect_clean("thh-ku-ss", p);
           v.expect("thh-ku-ss", p, "E2 from the module equals resolution");
           v.expect("thh-ku-ss", p, "d^2(gamma_k[du]");
           v.expect("thh-ku-ss", p, "E3 = E-infinity:");
           v.expect("thh-ku-ss", p, "alternative du*z = 0 contradicts the abutment");
         }
       }},
      {"AC5", "Theta bookkeeping: ker + im, theta lift conditional at p = 3", [](Verdict& v) {
         for (auto p : kPrimes) {
           v.expect_clean("ausoni", p);
           v.expect("ausoni", p, "E(lambda1) (x) Theta equals ker + im");
         }
         v.expect("ausoni", 3, "theta lifts multiplicatively", Status::Conditional);
         v.expect("ausoni", 5, "theta lifts multiplicatively", Status::Pass);
       }},
      {"AC6", "long exact sequences exact at all joints, two coefficient choices", [](Verdict& v) {
         for (auto p : kPrimes)
           for (const char* s : {"les-ell", "les-ku"})
             for (const char* c : {"(c = 0)", "(c = 1)"})
               for (const char* j : {"exact at A ", "exact at B ", "exact at C "}) {
                 v.expect_clean(s, p);
                 v.expect(s, p, std::string(j) + c);
               }
       }},
      {"AC7", "suspension operator: four carriers, every mutation detected", [](Verdict& v) {
         for (auto p : kPrimes) {
           v.expect_clean("suspension", p);
           v.expect("suspension", p, "sigma respects the relations of");
           v.expect("suspension", p, "every single sigma mutation is detected");
           v.expect("suspension", p, "sigma(b_j) = (1+j) a_j violates a relation");
         }
       }},
      {"AC8", "property suites: Tor grid, random pages, divided powers, rewriting", [](Verdict& v) {
         double total = 0;
         for (auto p : kPrimes) {
           for (const char* s : {"tor-oracle", "properties"}) {
             v.expect_clean(s, p);
             total += run(s, p).seconds;
           }
           v.expect("tor-oracle", p, "closed form equals resolution on the grid");
           v.expect("properties", p, "random pages: d o d = 0");
           v.expect("properties", p, "Leibniz rule");
           v.expect("properties", p, "divided powers have the Hilbert series of truncated towers");
           v.expect("properties", p, "normal form is idempotent");
           v.expect("properties", p, "independent of rule order");
         }
         v.within("property suites", total, 60.0);
       }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      c.body(v);
    } catch (const std::exception& e) {
      v.problems.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = v.problems.empty();
    failures += ok ? 0 : 1;
    std::cout << c.id << ' ' << (ok ? "PASS" : "FAIL") << "  " << c.title;
    if (!ok) std::cout << "  [" << v.problems.front() << (v.problems.size() > 1 ? " ..." : "") << ']';
    std::cout << '\n';
  }
  return failures == 0 ? 0 : 1;
}
