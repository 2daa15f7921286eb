#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <string_view>
#include <vector>

namespace thhcalc {

enum class Status { Pass, Fail, Conditional };

std::string_view to_string(Status s) noexcept;

struct DegreeEntry {
  int n = 0;
  std::int64_t expected = 0;
  std::int64_t actual = 0;
  friend bool operator==(const DegreeEntry&, const DegreeEntry&) = default;
};

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
  std::vector<DegreeEntry> degrees;
  std::vector<std::string> witnesses;
};

struct Report {
  std::string scenario;
  std::uint32_t prime = 0;
  int cap = 0;
  std::deque<Check> checks;  // references returned by add() stay valid
  std::vector<std::string> warnings;

  Check& add(std::string name, bool ok, std::string detail = {});
  /// True when no check has status Fail.
  bool passed() const noexcept;
  int exit_code() const noexcept { return passed() ? 0 : 1; }
};

/// Degree table over 0..cap from two dimension vectors; returns whether they agree.
bool fill_degrees(Check& check, const std::vector<std::int64_t>& expected, const std::vector<std::int64_t>& actual);

enum class Format { Text, Json };

Format format_from_string(std::string_view s);  // throws ParseError
std::string emit_report(const Report& report, Format format);
std::string emit_reports(const std::vector<Report>& reports, Format format);

}  // namespace thhcalc
