#include "pnl/report.hpp"

#include <iomanip>
#include <sstream>

#include "pnl/walsh.hpp"

namespace pnl {

Format format_from_name(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw Error(Errc::FormatError, "unknown report format '" + name + "'");
}

bool VerificationSuite::passed() const {
  for (const auto& c : cases)
    if (!c.passed) return false;
  return true;
}

void VerificationSuite::check(std::string description, bool ok, std::string observed, std::string expected) {
  cases.push_back({std::move(description), ok, std::move(observed), std::move(expected)});
}

std::string to_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json to_json(const CyclotomicInt& w) { return Json(w.coeffs()); }

Json to_json(const ValueDistribution& d) {
  Json out = Json::array();
  for (const auto& [size, mult] : d.entries) out.push_back({size, mult});
  return out;
}

Json to_json(const ExtremalBounds& b) {
  Json j;
  j["lower"] = b.lower ? Json(to_text(*b.lower)) : Json(nullptr);
  j["upper"] = b.upper ? Json(to_text(*b.upper)) : Json(nullptr);
  j["lower_ceil"] = b.lower_ceil;
  j["upper_floor"] = b.upper_floor;
  j["attainable"] = b.attainable;
  return j;
}

Json distribution_json(const PreimageMap& map, unsigned n) {
  Json j;
  j["distribution"] = to_json(ValueDistribution::from_counts(map.counts));
  j["type"] = to_string(classify_distribution(map, n).type);
  return j;
}

namespace {

template <class Fn>
Json guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return Json{{"error", std::string(errc_name(e.code()))}, {"detail", e.what()}};
  }
}

}  // namespace

Json analysis_json(const FunctionTable& f) {
  const auto map = preimage_map(f);
  const auto verdict = classify_distribution(map, f.n());
  Json j;
  j["shape"] = {{"p", f.p()}, {"n", f.n()}, {"m", f.m()}};
  j["distribution"] = to_json(ValueDistribution::from_counts(map.counts));
  j["type"] = to_string(verdict.type);
  Json v;
  v["type"] = to_string(verdict.type);
  v["unique_preimage"] = verdict.unique_preimage ? Json(*verdict.unique_preimage) : Json(nullptr);
  v["within_bounds"] = verdict.within_bounds;
  j["verdict"] = v;
  j["bounds"] = to_json(verdict.bounds);
  Json checks;
  const bool pn = is_perfect_nonlinear(f);
  checks["perfect_nonlinear"] = pn;
  const auto surj = surjectivity_check(f);
  checks["surjective"] = surj.surjective;
  checks["surjectivity_guaranteed"] = surj.guaranteed;
  if (pn) {
    checks["second_moment"] = second_moment_check(f);
    const auto img = image_set_bound_check(f);
    checks["image_set"] = {{"image_size", img.image_size}, {"lower_bound", to_text(img.lower_bound)},
                           {"satisfied", img.satisfied}};
    if (f.m() == 1) {
      checks["nyberg"] = guarded([&] {
        const auto nv = nyberg_shape_check(f);
        Json r{{"holds", true}};
        if (f.n() % 2 == 0) r["upper_signs"] = nv.upper_signs;
        else r["shift"] = *nv.shift, r["sign"] = *nv.sign;
        return r;
      });
      checks["regularity"] = guarded([&] {
        const auto rc = classify_regularity(f);
        Json r{{"verdict", to_string(rc.verdict)}};
        if (rc.epsilon) r["epsilon"] = to_string(*rc.epsilon);
        return r;
      });
    }
    if (f.n() % 2 == 0) {
      checks["regular_constraint"] = guarded([&] {
        const auto rc = constraint_check_regular(f);
        return Json{{"holds", true}, {"plus_branch", rc.plus_branch}, {"k", rc.k}, {"k0", rc.k0}};
      });
      if (f.p() == 2)
        checks["parity_constraint"] = guarded([&] {
          const auto bc = constraint_check_boolean(f);
          return Json{{"holds", true}, {"parity", bc.parity}};
        });
    } else if (f.p() != 2) {
      checks["odd_n_constraint"] = guarded([&] {
        constraint_check_odd_n(f);
        return Json{{"holds", true}};
      });
    }
  }
  j["checks"] = checks;
  return j;
}

Json to_json(const VerificationSuite& s, bool timing) {
  Json j;
  j["suite"] = s.id;
  j["title"] = s.title;
  j["passed"] = s.passed();
  Json cases = Json::array();
  for (const auto& c : s.cases)
    cases.push_back({{"description", c.description}, {"passed", c.passed}, {"observed", c.observed},
                     {"expected", c.expected}});
  j["cases"] = cases;
  if (timing) j["wall_seconds"] = s.wall_seconds;
  return j;
}

Json to_json(const std::vector<SurjectivityRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back({{"p", r.p}, {"n", r.n}, {"k", r.k}, {"surjective", r.surjective},
                   {"guaranteed", r.guaranteed}, {"image_size", r.image_size}});
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string emit_report(const std::vector<VerificationSuite>& suites, Format format, bool timing) {
  std::ostringstream out;
  switch (format) {
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& s : suites) arr.push_back(to_json(s, timing));
      out << Json{{"suites", arr}}.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "suite,case,passed,observed,expected\n";
      for (const auto& s : suites)
        for (const auto& c : s.cases)
          out << csv_field(s.id) << ',' << csv_field(c.description) << ',' << (c.passed ? "true" : "false") << ','
              << csv_field(c.observed) << ',' << csv_field(c.expected) << '\n';
      break;
    case Format::Text:
      for (const auto& s : suites) {
        out << (s.passed() ? "[PASS] " : "[FAIL] ") << s.id << "  " << s.title;
        if (timing) out << "  (" << std::fixed << std::setprecision(2) << s.wall_seconds << " s)";
        out << '\n';
        for (const auto& c : s.cases)
          out << "  " << (c.passed ? "ok   " : "FAIL ") << c.description << ": " << c.observed
              << (c.passed ? "" : " (expected " + c.expected + ")") << '\n';
      }
      break;
  }
  return out.str();
}

std::string emit_report(const std::vector<SurjectivityRow>& rows, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Json:
      out << to_json(rows).dump(2) << '\n';
      break;
    case Format::Csv:
      out << "p,n,k,surjective,guaranteed,image_size\n";
      for (const auto& r : rows)
        out << r.p << ',' << r.n << ',' << r.k << ',' << (r.surjective ? "true" : "false") << ','
            << (r.guaranteed ? "true" : "false") << ',' << r.image_size << '\n';
      break;
    case Format::Text:
      out << " p |  n |  k | surjective\n";
      for (const auto& r : rows)
        out << std::setw(2) << r.p << " | " << std::setw(2) << r.n << " | " << std::setw(2) << r.k << " | "
            << (r.surjective ? "yes" : "no") << (r.guaranteed ? " (guaranteed)" : "") << '\n';
      break;
  }
  return out.str();
}

std::string emit_report(const Json& analysis, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Json:
      out << analysis.dump(2) << '\n';
      break;
    case Format::Csv:
      out << "key,value\n";
      for (const auto& [key, value] : analysis.items()) out << csv_field(key) << ',' << csv_field(value.dump()) << '\n';
      break;
    case Format::Text:
      for (const auto& [key, value] : analysis.items()) out << key << ": " << value.dump() << '\n';
      break;
  }
  return out.str();
}

}  // namespace pnl
