#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pnl/distributions.hpp"
#include "pnl/function_table.hpp"
#include "pnl/report.hpp"

namespace pnl {

struct CorpusEntry {
  std::string name;
  FunctionTable table;
  std::optional<DistributionType> expected;  // set when the construction fixes the type
};

/// Bent functions over p in {2, 3, 5} with p^n <= 3^6, built by the
/// construction module.
std::vector<CorpusEntry> bent_corpus();

/// F_2^n -> F_2^m or F_3^n -> F_3^m tables with uniformly random values.
FunctionTable random_function(unsigned p, unsigned n, unsigned m, std::mt19937_64& rng);

struct SuiteOptions {
  std::uint64_t seed = 2024;
  bool long_run = false;
};

struct SuiteInfo {
  std::string id;
  std::string title;
};

const std::vector<SuiteInfo>& suite_registry();

/// Throws UnknownSuite for ids outside the registry.
VerificationSuite run_suite(const std::string& id, const SuiteOptions& opts = {});

}  // namespace pnl
