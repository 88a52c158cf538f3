#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "jpevalb/alignment.hpp"
#include "jpevalb/legacy.hpp"
#include "jpevalb/scoring.hpp"
#include "jpevalb/tree.hpp"

namespace jpevalb {

struct RunConfig {
  std::filesystem::path gold_path;
  std::filesystem::path system_path;
  bool legacy = false;
  std::optional<std::filesystem::path> prm_path;  // legacy only
  std::optional<std::filesystem::path> exception_list_path;
};

/// Sentence-aligns the two tree lists and scores every unit; row ids are
/// unit positions starting at 1.
std::vector<SentenceScore> evaluate_native(std::span<const SyntaxTree> gold,
                                           std::span<const SyntaxTree> sys,
                                           const SimilarityConfig& config);

struct LegacyRun {
  std::vector<SentenceScore> rows;
  /// evalb-style messages, e.g. "3 : Length unmatch (47|46)".
  std::vector<std::string> diagnostics;
  /// Set when the error limit was exceeded; no summary is produced then.
  bool aborted = false;
};

/// Pairs lines by position. An error past the MAX_ERROR allowance stops
/// the run before its row is added; a tree count mismatch is an error too.
LegacyRun evaluate_legacy(std::span<const EvalbLine> gold,
                          std::span<const EvalbLine> sys,
                          const ParamSet& params);

/// One tree per line.
LegacyRun evaluate_legacy(std::span<const SyntaxTree> gold,
                          std::span<const SyntaxTree> sys,
                          const ParamSet& params);

/// Reads both files, writes the report to out and diagnostics to err.
/// Returns 0 on success and 1 on I/O, parse or configuration failure or a
/// legacy abort.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace jpevalb
