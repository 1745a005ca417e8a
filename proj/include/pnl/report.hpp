#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pnl/cyclotomic.hpp"
#include "pnl/distributions.hpp"
#include "pnl/planar.hpp"

namespace pnl {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Text };
Format format_from_name(const std::string& name);

struct SuiteCase {
  std::string description;
  bool passed = false;
  std::string observed;
  std::string expected;
};

struct VerificationSuite {
  std::string id;
  std::string title;
  std::vector<SuiteCase> cases;
  double wall_seconds = 0;

  bool passed() const;
  void check(std::string description, bool ok, std::string observed, std::string expected);
  template <class T>
  void expect_eq(std::string description, const T& observed, const T& expected);
};

std::string to_text(const Rational& r);  // "a/b" or "a"

Json to_json(const CyclotomicInt& w);
Json to_json(const ValueDistribution& d);
Json to_json(const ExtremalBounds& b);
/// {"distribution": ..., "type": ...}
Json distribution_json(const PreimageMap& map, unsigned n);
/// Distribution, verdict, bounds and the applicable checks of one table.
Json analysis_json(const FunctionTable& f);
Json to_json(const VerificationSuite& s, bool timing = false);
Json to_json(const std::vector<SurjectivityRow>& rows);

/// Stable serialisation; wall time appears only with `timing`.
std::string emit_report(const std::vector<VerificationSuite>& suites, Format format, bool timing = false);
std::string emit_report(const std::vector<SurjectivityRow>& rows, Format format);
std::string emit_report(const Json& analysis, Format format);

template <class T>
void VerificationSuite::expect_eq(std::string description, const T& observed, const T& expected) {
  auto render = [](const T& v) {
    if constexpr (requires { v.to_string(); }) return v.to_string();
    else if constexpr (std::is_same_v<T, std::string>) return v;
    else if constexpr (std::is_same_v<T, bool>) return std::string(v ? "true" : "false");
    else return std::to_string(v);
  };
  check(std::move(description), observed == expected, render(observed), render(expected));
}

}  // namespace pnl
