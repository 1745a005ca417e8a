// pnl: command-line front end for the perfect-nonlinearity toolkit.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pnl/anf.hpp"
#include "pnl/constructions.hpp"
#include "pnl/enumeration.hpp"
#include "pnl/planar.hpp"
#include "pnl/report.hpp"
#include "pnl/suites.hpp"
#include "pnl/trace_poly.hpp"
#include "pnl/walsh.hpp"

namespace {

using namespace pnl;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Globals {
  std::uint64_t seed = 2024;
  bool long_run = false;
  bool json = false;
  std::string format = "text";
  bool timing = false;

  Format resolved() const { return json ? Format::Json : format_from_name(format); }
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(Errc::BadParameters, "cannot write '" + path + "'");
  out << text;
}

// "5..9" or "5,7,9" or "6".
std::vector<unsigned> parse_range(const std::string& text) {
  std::vector<unsigned> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const auto lo = std::stoul(text.substr(0, dots)), hi = std::stoul(text.substr(dots + 2));
    for (auto v = lo; v <= hi; ++v) out.push_back(static_cast<unsigned>(v));
    return out;
  }
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(static_cast<unsigned>(std::stoul(item)));
  return out;
}

struct ConstructArgs {
  std::string kind;
  ConstructionRecipe recipe;
  std::optional<std::uint64_t> lambda_log;
  bool nonsquare = false;
  std::string anf, poly, left, right, input, output;
};

FunctionTable run_construct(const ConstructArgs& a) {
  auto r = a.recipe;
  r.lambda_log = a.lambda_log;
  r.lambda_square = !a.nonsquare;
  if (a.kind == "anf") return table_from_anf(parse_anf(a.anf, r.p, r.n));
  if (a.kind == "trace") return table_from_trace_poly(parse_trace_poly(a.poly, Field::create(r.p, r.n), r.m));
  if (a.kind == "almost-balanced") return almost_balanced_instance(r.p, r.n, r.m, !a.nonsquare);
  const auto kind = kind_from_name(a.kind);
  if (!kind) throw Error(Errc::BadParameters, "unknown construction '" + a.kind + "'");
  r.kind = *kind;
  switch (*kind) {
    case ConstructionKind::DirectSum:
      if (a.left.empty() || a.right.empty()) throw Error(Errc::BadParameters, "direct-sum needs --left and --right");
      return direct_sum(load_table(a.left), load_table(a.right));
    case ConstructionKind::LinearImage:
    case ConstructionKind::CoordinateRestriction: {
      if (a.input.empty()) throw Error(Errc::BadParameters, "--input table required");
      const auto f = load_table(a.input);
      return *kind == ConstructionKind::LinearImage ? compose_surjective_linear(f, projection(r.k, f.m()))
                                                    : coordinate_restriction(f, r.k);
    }
    default:
      return build(r);
  }
}

Json walsh_json(const FunctionTable& f, bool at_zero, std::optional<Index> only) {
  Json j;
  j["shape"] = {{"p", f.p()}, {"n", f.n()}, {"m", f.m()}};
  if (at_zero) {
    Json values = Json::array();
    for (const auto& w : spectrum_at_zero(f)) values.push_back(to_json(w));
    j["at_zero"] = values;
    return j;
  }
  Json comps = Json::array();
  for (Index b = 1; b < f.codomain_size(); ++b) {
    if (only && *only != b) continue;
    Json spectrum = Json::array();
    for (const auto& w : walsh_component(f, b)) spectrum.push_back(to_json(w));
    comps.push_back({{"b", b}, {"spectrum", spectrum}});
  }
  j["components"] = comps;
  return j;
}

std::string walsh_text(const Json& j) {
  std::ostringstream out;
  auto coeffs = [](const Json& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + w[i].dump();
    return s + "]";
  };
  if (j.contains("at_zero")) {
    for (std::size_t b = 0; b < j["at_zero"].size(); ++b) out << "b=" << b << " " << coeffs(j["at_zero"][b]) << '\n';
    return out.str();
  }
  for (const auto& c : j["components"]) {
    out << "component b=" << c["b"].get<Index>() << '\n';
    for (std::size_t a = 0; a < c["spectrum"].size(); ++a) out << "  a=" << a << " " << coeffs(c["spectrum"][a]) << '\n';
  }
  return out.str();
}

Json catalog_json(const Catalog& cat) {
  Json entries = Json::array();
  for (const auto& e : cat.candidates.entries) {
    Json row{{"t", e.solution.t}, {"minus_branch", e.minus_branch}, {"parity", e.parity}};
    row["realizable"] = e.realizable ? Json(*e.realizable) : Json(nullptr);
    row["sizes"] = to_json(e.solution.sizes(cat.n, e.minus_branch));
    entries.push_back(row);
  }
  Json admissible = Json::array();
  for (const auto& d : cat.admissible()) admissible.push_back(to_json(d));
  return {{"p", cat.p}, {"m", cat.m}, {"n", cat.n}, {"candidates", entries}, {"admissible", admissible}};
}

std::string catalog_text(const Catalog& cat) {
  std::ostringstream out;
  out << "p=" << cat.p << " m=" << cat.m << " n=" << cat.n << ": " << cat.candidates.entries.size()
      << " candidate solutions, " << cat.admissible().size() << " admissible distributions\n";
  for (const auto& e : cat.candidates.entries) {
    out << "  " << e.solution.to_string() << (e.minus_branch ? " (minus branch)" : "") << " -> "
        << e.solution.sizes(cat.n, e.minus_branch).to_string();
    if (e.realizable) out << (*e.realizable ? "  admissible" : "  excluded");
    out << '\n';
  }
  return out.str();
}

Json planar_json(const PlanarReport& r) {
  return {{"planar", r.is_planar},          {"two_to_one", r.is_two_to_one}, {"even", r.even_function},
          {"image_size", r.image_size},     {"lower_bound", r.lower_bound},  {"upper_floor", r.upper_floor},
          {"upper_exact", r.upper_exact},   {"at_lower", r.at_lower},        {"at_upper", r.at_upper}};
}

std::string suite_help() {
  std::string out = "Suites:\n";
  for (const auto& s : suite_registry()) out += "  " + s.id + std::string(18 - std::min<std::size_t>(17, s.id.size()), ' ') + s.title + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfect nonlinear functions: constructions, spectra, value distributions and verification suites"};
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(suite_help());
  Globals g;
  app.add_option("--seed", g.seed, "Seed for every random choice")->capture_default_str();
  app.add_flag("--long", g.long_run, "Allow long-running experiments");
  app.add_flag("--json", g.json, "Emit JSON (same as --format json)");
  app.add_option("--format", g.format, "Report format: json, csv or text")->capture_default_str();
  app.add_flag("--timing", g.timing, "Include wall time in suite reports");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a function table");
  construct->add_option("kind", ca.kind,
                        "mm, psap, opoly, gold, kasami, pary-monomial, planar-monomial, seed84, direct-sum, linear-image, "
                        "restriction, almost-balanced, anf, trace")
      ->required();
  construct->add_option("--p", ca.recipe.p, "Characteristic")->capture_default_str();
  construct->add_option("--n", ca.recipe.n, "Input dimension")->capture_default_str();
  construct->add_option("--m", ca.recipe.m, "Output dimension")->capture_default_str();
  construct->add_option("--d", ca.recipe.d, "Exponent");
  construct->add_option("--i", ca.recipe.i, "Kasami parameter");
  construct->add_option("--k", ca.recipe.k, "Target dimension for restriction or linear image");
  construct->add_option("--lambda-log", ca.lambda_log, "Coefficient g^e");
  construct->add_option("--rho", ca.recipe.rho_constant, "Constant rho for Maiorana-McFarland");
  construct->add_flag("--nonsquare", ca.nonsquare, "Non-square coefficient (pary) or type (-) (almost-balanced)");
  construct->add_option("--anf", ca.anf, "ANF text, coordinates separated by ';'");
  construct->add_option("--poly", ca.poly, "Trace polynomial, e.g. \"g^3*x^5 + 2*x^2\"");
  construct->add_option("--left", ca.left, "First summand table");
  construct->add_option("--right", ca.right, "Second summand table");
  construct->add_option("--input", ca.input, "Input table");
  construct->add_option("-o,--output", ca.output, "Output file (default stdout)");

  std::string table_path;
  auto* analyze = app.add_subcommand("analyze", "Value distribution, verdict, bounds and structural checks");
  analyze->add_option("table", table_path, "Function table file")->required()->check(CLI::ExistingFile);

  bool at_zero = false;
  std::optional<Index> component;
  auto* walsh = app.add_subcommand("walsh", "Walsh spectra as cyclotomic coefficient vectors");
  walsh->add_option("table", table_path, "Function table file")->required()->check(CLI::ExistingFile);
  walsh->add_flag("--at-zero", at_zero, "Only W_F(b, 0) for every b");
  walsh->add_option("--component", component, "Only component b");

  unsigned ep = 2, em = 2;
  std::optional<unsigned> en;
  auto* enumerate = app.add_subcommand("enumerate", "Solve the T_i system and build distribution catalogs");
  enumerate->add_option("--p", ep, "Characteristic")->capture_default_str();
  enumerate->add_option("--m", em, "Output dimension")->capture_default_str();
  enumerate->add_option("--n", en, "Input dimension (default 2m)");

  auto* planar = app.add_subcommand("planar", "Planarity, 2-to-1 test and image-set bounds");
  planar->add_option("table", table_path, "Function table file")->required()->check(CLI::ExistingFile);

  auto* experiment = app.add_subcommand("experiment", "Seeded experiments");
  experiment->require_subcommand(1);
  std::uint64_t samples = 20000;
  auto* shifts = experiment->add_subcommand("linear-shifts", "Distributions of F + A for random linear A");
  shifts->add_option("table", table_path, "Function table file")->required()->check(CLI::ExistingFile);
  shifts->add_option("--samples", samples, "Number of random matrices")->capture_default_str();
  shifts->add_option("--seed", g.seed, "Seed");
  unsigned sp = 3;
  std::string sn = "5..9";
  std::optional<unsigned> k_min, k_max;
  auto* surj = experiment->add_subcommand("surjectivity", "Surjective coordinate restrictions of x^2");
  surj->add_option("--p", sp, "Odd prime")->capture_default_str();
  surj->add_option("--n", sn, "Degrees, e.g. 5..9 or 5,7")->capture_default_str();
  surj->add_option("--k-min", k_min, "Smallest k (default floor(n/2)+1)");
  surj->add_option("--k-max", k_max, "Largest k");
  surj->add_flag("--long", g.long_run, "Lift the desk-scale cap");

  std::vector<std::string> suite_ids;
  auto* verify = app.add_subcommand("verify", "Run named verification suites (all by default)");
  verify->add_option("suites", suite_ids, "Suite ids");
  verify->add_flag("--long", g.long_run, "Include long-running cases");
  verify->add_option("--seed", g.seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    const Format format = g.resolved();
    if (*construct) {
      std::ostringstream out;
      write_table(out, run_construct(ca));
      write_output(ca.output, out.str());
      return kExitPass;
    }
    if (*analyze) {
      std::cout << emit_report(analysis_json(load_table(table_path)), format);
      return kExitPass;
    }
    if (*walsh) {
      const auto j = walsh_json(load_table(table_path), at_zero, component);
      std::cout << (format == Format::Json ? j.dump(2) + "\n" : walsh_text(j));
      return kExitPass;
    }
    if (*enumerate) {
      const auto cat = catalog_m(ep, em, en.value_or(2 * em));
      std::cout << (format == Format::Json ? catalog_json(cat).dump(2) + "\n" : catalog_text(cat));
      return kExitPass;
    }
    if (*planar) {
      const auto r = planar_report(load_table(table_path));
      std::cout << emit_report(planar_json(r), format);
      return kExitPass;
    }
    if (*shifts) {
      const auto f = load_table(table_path);
      const auto result = linear_shift_experiment(f, samples, g.seed);
      Json found = Json::array();
      for (const auto& [d, hits] : result.hits) found.push_back({{"distribution", to_json(d)}, {"hits", hits}});
      Json j{{"samples", result.samples}, {"seed", result.seed}, {"distinct", result.hits.size()}, {"found", found}};
      if (format == Format::Json) {
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << result.hits.size() << " distinct distributions in " << result.samples << " samples (seed "
                  << result.seed << ")\n";
        for (const auto& [d, hits] : result.hits) std::cout << "  " << d.to_string() << "  x" << hits << '\n';
      }
      return kExitPass;
    }
    if (*surj) {
      const auto rows = surjectivity_table(sp, parse_range(sn), {g.long_run, k_min, k_max});
      std::cout << emit_report(rows, format);
      bool all = true;
      for (const auto& r : rows) all = all && (r.surjective || !r.guaranteed);
      return all ? kExitPass : kExitFail;
    }
    if (*verify) {
      if (suite_ids.empty())
        for (const auto& s : suite_registry()) suite_ids.push_back(s.id);
      std::vector<VerificationSuite> results;
      for (const auto& id : suite_ids) results.push_back(run_suite(id, {g.seed, g.long_run}));
      std::cout << emit_report(results, format, g.timing);
      for (const auto& r : results)
        if (!r.passed()) return kExitFail;
      return kExitPass;
    }
  } catch (const Error& e) {
    std::cerr << "pnl: " << e.what() << '\n';
    switch (e.code()) {
      // A library check contradicted a proven statement.
      case Errc::ShapeViolation:
      case Errc::ConstraintViolation:
      case Errc::InconsistentTotals:
        return kExitFail;
      default:
        return kExitUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "pnl: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
