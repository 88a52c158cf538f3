#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jpevalb/constituents.hpp"
#include "jpevalb/scoring.hpp"
#include "jpevalb/tree.hpp"

namespace jpevalb {

/// evalb parameter file settings. Equivalences are symmetric pairs.
struct ParamSet {
  std::vector<std::string> delete_labels;
  std::vector<std::string> delete_labels_for_length;
  std::vector<std::string> quote_labels;
  std::vector<std::pair<std::string, std::string>> eq_labels;
  std::vector<std::pair<std::string, std::string>> eq_words;
  bool labeled = true;
  int cutoff_len = 40;
  int max_error = 10;
  int debug = 0;

  /// Settings of the COLLINS.prm file distributed with evalb.
  static ParamSet collins();

  bool label_equal(std::string_view a, std::string_view b) const;
  bool word_equal(std::string_view a, std::string_view b) const;
  bool is_delete_label(std::string_view label) const;
  bool is_delete_label_for_length(std::string_view label) const;
};

class PrmError : public std::runtime_error {
 public:
  PrmError(const std::string& message, std::size_t line,
           const std::string& source = {});
  std::size_t line() const noexcept { return line_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t line_;
};

/// Parses "KEY value" lines on top of evalb's built-in settings (nothing
/// deleted, labeled, cutoff 40, max error 10). Lines starting with '#' or
/// shorter than 3 characters are ignored. Unknown keys and malformed
/// EQ_LABEL/EQ_WORD lines are skipped with a message appended to warnings.
/// Throws PrmError when an integer key has a non-integer value.
ParamSet parse_prm(std::string_view text,
                   std::vector<std::string>* warnings = nullptr);
ParamSet load_prm(const std::filesystem::path& path,
                  std::vector<std::string>* warnings = nullptr);

/// A tree as evalb sees it after deletions: surviving leaves reindexed from
/// 0 and the surviving brackets with functional annotations removed.
struct FilteredTree {
  std::vector<TokenLeaf> leaves;
  ConstituentSet constituents;
  std::size_t length = 0;  // leaves not in delete_labels_for_length
};

FilteredTree apply_param_filters(const SyntaxTree& tree, const ParamSet& params);

struct LegacyResult {
  SentenceScore score;
  /// Set for error rows ("Length unmatch (37|36)" and the like).
  std::optional<std::string> error;
};

/// Positional evalb comparison of one gold/test pair. The returned score's
/// id is left at 0 for the caller to fill.
LegacyResult legacy_score_pair(const SyntaxTree& gold, const SyntaxTree& sys,
                               const ParamSet& params);

/// evalb reads one sentence per line; a line may hold several bracketed
/// trees or none at all.
using EvalbLine = std::vector<SyntaxTree>;

/// Same as legacy_score_pair for whole lines.
LegacyResult legacy_score_lines(std::span<const SyntaxTree> gold,
                                std::span<const SyntaxTree> sys,
                                const ParamSet& params);

/// Splits text into lines and parses each. A final newline does not start
/// an extra line.
std::vector<EvalbLine> parse_evalb_lines(std::string_view text);
std::vector<EvalbLine> read_evalb_lines(const std::filesystem::path& path);

}  // namespace jpevalb
