#include "thhcalc/report.hpp"

#include "thhcalc/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace thhcalc {

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Conditional: return "conditional";
  }
  return "fail";
}

Check& Report::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail), {}, {}});
  return checks.back();
}

bool Report::passed() const noexcept {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::Fail; });
}

bool fill_degrees(Check& check, const std::vector<std::int64_t>& expected, const std::vector<std::int64_t>& actual) {
  bool ok = expected.size() == actual.size();
  const std::size_t n = std::max(expected.size(), actual.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t e = i < expected.size() ? expected[i] : 0;
    const std::int64_t a = i < actual.size() ? actual[i] : 0;
    check.degrees.push_back({static_cast<int>(i), e, a});
    ok = ok && e == a;
  }
  return ok;
}

Format format_from_string(std::string_view s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  throw Error(ErrorCode::ParseError, "unknown format '" + std::string(s) + "'");
}

namespace {

using json = nlohmann::ordered_json;

json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json degrees = json::array();
    for (const auto& d : c.degrees) degrees.push_back({{"n", d.n}, {"expected", d.expected}, {"actual", d.actual}});
    checks.push_back({{"name", c.name},
                      {"status", std::string(to_string(c.status))},
                      {"detail", c.detail},
                      {"degrees", std::move(degrees)},
                      {"witnesses", c.witnesses}});
  }
  return {{"scenario", r.scenario},
          {"prime", r.prime},
          {"cap", r.cap},
          {"checks", std::move(checks)},
          {"warnings", r.warnings}};
}

void write_text(std::ostringstream& out, const Report& r) {
  out << "scenario " << r.scenario << "  p=" << r.prime << "  cap=" << r.cap << "\n";
  for (const auto& w : r.warnings) out << "  warning: " << w << "\n";
  for (const auto& c : r.checks) {
    out << "  [" << to_string(c.status) << "] " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
    bool any = false;
    for (const auto& d : c.degrees) any = any || d.expected != 0 || d.actual != 0;
    if (any) {
      out << "      n  expected  actual\n";
      for (const auto& d : c.degrees) {
        if (d.expected == 0 && d.actual == 0) continue;
        out << "    " << (d.expected == d.actual ? ' ' : '*');
        const std::string n = std::to_string(d.n), e = std::to_string(d.expected), a = std::to_string(d.actual);
        out << std::string(4 - std::min<std::size_t>(4, n.size()), ' ') << n << std::string(10 - std::min<std::size_t>(10, e.size()), ' ')
            << e << std::string(8 - std::min<std::size_t>(8, a.size()), ' ') << a << "\n";
      }
    }
    for (const auto& w : c.witnesses) out << "      witness: " << w << "\n";
  }
  out << "result: " << (r.passed() ? "pass" : "fail") << "\n";
}

}  // namespace

std::string emit_report(const Report& report, Format format) {
  if (format == Format::Json) return to_json(report).dump(2) + "\n";
  std::ostringstream out;
  write_text(out, report);
  return out.str();
}

std::string emit_reports(const std::vector<Report>& reports, Format format) {
  if (format == Format::Json) {
    json all = json::array();
    for (const auto& r : reports) all.push_back(to_json(r));
    return all.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const auto& r : reports) {
    write_text(out, r);
    out << "\n";
  }
  return out.str();
}

}  // namespace thhcalc
