#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "jpevalb/alignment.hpp"
#include "jpevalb/constituents.hpp"
#include "jpevalb/tree.hpp"

namespace jpevalb {

enum class Status { ok = 0, skip = 1, error = 2 };

/// One report row.
struct SentenceScore {
  std::size_t id = 0;
  std::size_t length = 0;
  Status status = Status::ok;
  double recall = 0.0;
  double precision = 0.0;
  std::size_t matched = 0;
  std::size_t gold_brackets = 0;
  std::size_t test_brackets = 0;
  std::size_t crossing = 0;
  std::size_t words = 0;
  std::size_t correct_tags = 0;
  double tag_accuracy = 0.0;

  friend bool operator==(const SentenceScore&, const SentenceScore&) = default;
};

struct SummaryBlock {
  std::size_t sentences = 0;
  std::size_t error_sentences = 0;
  std::size_t skip_sentences = 0;
  std::size_t valid_sentences = 0;
  std::size_t total_gold = 0;
  std::size_t total_test = 0;
  std::size_t total_matched = 0;
  std::size_t total_crossing = 0;
  std::size_t total_words = 0;
  std::size_t total_correct_tags = 0;
  std::size_t complete_sentences = 0;
  std::size_t no_crossing_sentences = 0;
  std::size_t two_or_less_crossing_sentences = 0;

  double recall() const;
  double precision() const;
  /// 0 when precision + recall is 0.
  double f1() const;
  double complete_match() const;
  double average_crossing() const;
  double no_crossing() const;
  double two_or_less_crossing() const;
  double tagging_accuracy() const;
};

struct CorpusSummary {
  int cutoff = 40;
  SummaryBlock all;
  SummaryBlock within_cutoff;  // rows with length <= cutoff
};

/// Largest one-to-one matching on (label, start, end).
std::size_t count_matched(const ConstituentSet& gold, const ConstituentSet& sys);

/// System constituents that partially overlap at least one gold constituent.
std::size_t count_crossing(const ConstituentSet& gold, const ConstituentSet& sys);

struct TagResult {
  std::size_t words = 0;
  std::size_t correct = 0;
  double accuracy = 0.0;  // 0 when there are no words
};

/// POS tag of empty elements (traces).
inline constexpr std::string_view kEmptyElementTag = "-NONE-";

/// A 1-to-1 word unit credits its gold leaf when both tags are equal. A
/// larger unit credits all of its gold leaves only when, ignoring empty
/// elements, each side holds a single leaf and their tags are equal; any
/// other unit earns nothing.
TagResult tag_accuracy(std::span<const TokenLeaf> gold,
                       std::span<const TokenLeaf> sys,
                       std::span<const AlignmentUnit> units);

/// Scores one sentence alignment unit: each side is merged under the dummy
/// root when it has several trees, words are aligned, and constituents are
/// compared in unit coordinates with functional annotations removed from
/// labels. Length excludes -NONE- leaves; words counts every gold leaf.
SentenceScore score_group(std::span<const SyntaxTree> gold_trees,
                          std::span<const SyntaxTree> sys_trees,
                          const SimilarityConfig& config, std::size_t id = 1);

/// Adds a row to a summary block following evalb's accounting: error and
/// skip rows are counted but contribute nothing else.
void accumulate(SummaryBlock& block, const SentenceScore& score);

CorpusSummary summarize(std::span<const SentenceScore> scores,
                        int cutoff = 40);

}  // namespace jpevalb
