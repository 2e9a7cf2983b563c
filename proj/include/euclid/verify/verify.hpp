#pragma once

// Verification suites over random instances and strategy comparisons.
//
// Instances are drawn from a small rational grid: every coordinate is n/d
// with 1 <= d <= 16 and |n/d| <= 32. Instance i of a suite is generated from
// its own stream seeded by (seed, i, id), so reports are identical whatever
// the number of worker threads.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "euclid/elements/catalog.hpp"

namespace euclid::verify {

using elements::Bundle;
using geom::Side;

struct Instance {
  Bundle args;
  std::optional<Side> side;
};

/// Random hypothesis-conforming instance for a base id ("I.44", "I.41", ...).
/// Throws UnknownProposition for ids without a generator.
Instance generate(const std::string& base_id, std::mt19937_64& rng);

/// The stream for instance `index` of a suite.
std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index, const std::string& id);

/// Ids that run_suite accepts, in catalog order.
std::vector<std::string> suite_ids();

struct StrategyStats {
  std::string strategy;  // empty for propositions without strategies
  int passed = 0;
  int failed = 0;
  int skipped = 0;  // StrategyInapplicable
  long joins = 0;
  long extends = 0;
  long circles = 0;
  long superpositions = 0;
  int min_superpositions = -1;  // per instance, over the instances that ran
  int max_superpositions = -1;
  int max_radical_depth = 0;
  long objects = 0;
  std::vector<std::string> failures;  // "instance <i>: <message>"
};

struct SuiteReport {
  std::string id;
  int instances = 0;
  std::uint64_t seed = 0;
  std::vector<StrategyStats> strategies;

  bool ok() const;
  /// One block per strategy: a summary line, the failures, a metrics block.
  std::string text() const;
  /// key=value records, one line per strategy.
  std::string records() const;
};

/// Runs `n` instances of `id` (a base id, or one with a strategy suffix)
/// under every listed strategy (all of them when empty). `threads` = 0 uses
/// the hardware concurrency.
SuiteReport run_suite(const std::string& id, int n, std::uint64_t seed, std::vector<std::string> strategies = {},
                      unsigned threads = 0);

struct StrategyRun {
  std::string strategy;
  bool ran = false;
  std::string error_kind;  // set when the strategy raised
  std::string error;
  elements::PropositionResult result;
};

struct ComparisonReport {
  std::string id;
  std::vector<StrategyRun> runs;

  /// Every run that ran has only passing claims.
  bool ok() const;
  std::string text() const;
  std::string records() const;
};

/// Runs each strategy on the same instance. Errors are recorded per strategy.
ComparisonReport compare(const std::string& id, const std::vector<std::string>& strategies, const Instance& inst);

}  // namespace euclid::verify
