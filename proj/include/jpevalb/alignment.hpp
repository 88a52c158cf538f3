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

namespace jpevalb {

/// A paired group of gold-side and system-side item indices.
///
/// Across a full alignment, concatenating gold_items over all units gives
/// 0..|gold|-1 exactly once, and likewise for sys_items.
struct AlignmentUnit {
  std::vector<std::size_t> gold_items;
  std::vector<std::size_t> sys_items;

  bool one_to_one() const noexcept {
    return gold_items.size() == 1 && sys_items.size() == 1;
  }

  friend bool operator==(const AlignmentUnit&, const AlignmentUnit&) = default;
};

enum class Side { gold, system };

/// Known surface equivalences (contractions, symbol spellings) that count as
/// a match during word alignment. Entries may span several tokens on either
/// side ("ca n't" <-> "can not"); lookup is symmetric and uses normalized text.
class ExceptionList {
 public:
  struct Entry {
    std::string first;   // normalized text
    std::string second;  // normalized text
  };

  void add(std::string_view first, std::string_view second);

  /// True when the normalized texts form a listed pair, in either order.
  bool contains(std::string_view first, std::string_view second) const;

  /// Listed pair that starts at gold[i] / sys[j], where gold and sys hold
  /// normalized tokens: some run of gold tokens concatenates to one side of
  /// an entry and some run of sys tokens to the other. Returns the number of
  /// tokens taken from each side (the longest such match).
  std::optional<std::pair<std::size_t, std::size_t>> match_at(
      std::span<const std::string> gold, std::size_t i,
      std::span<const std::string> sys, std::size_t j) const;

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

 private:
  std::vector<Entry> entries_;
};

class ExceptionListError : public std::runtime_error {
 public:
  ExceptionListError(const std::string& message, std::size_t line,
                     const std::string& source = {});
  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string message_;
  std::size_t line_;
};

/// Format: one pair per line, two tab-separated fields, '#' starts a comment
/// line, blank lines ignored.
ExceptionList parse_exception_list(std::string_view text);
ExceptionList load_exception_list(const std::filesystem::path& path);

struct SimilarityConfig {
  /// Two normalized strings are similar when their edit distance divided by
  /// the longer length is below this value.
  double ratio_threshold = 0.1;
  ExceptionList exceptions;
};

/// Removes whitespace and lowercases ASCII letters. Other code points are
/// kept as-is.
std::string normalize_nospace(std::string_view text);

/// Number of Unicode scalar values in a UTF-8 string. Invalid bytes count as
/// one character each.
std::size_t char_length(std::string_view text);

/// Levenshtein distance over Unicode scalar values.
std::size_t edit_distance(std::string_view a, std::string_view b);

/// Expects already-normalized inputs; two empty strings are similar.
bool similar(std::string_view a, std::string_view b,
             const SimilarityConfig& config);

/// How many items a unit opened at (i, j) takes from each side.
struct Step {
  std::size_t gold = 1;
  std::size_t system = 1;
};

/// Greedy left-to-right alignment of two sequences of lengths n_gold and n_sys.
///
/// At each position, head(i, j) -> std::optional<Step> decides whether a unit
/// can be emitted immediately. Otherwise a unit is opened with gold[i] and
/// sys[j] and grown one item at a time on the side named by grow(unit) until
/// closes(i, j, unit) holds for the next unconsumed pair (i, j), or one side
/// runs out, in which case the unit absorbs everything left on both sides.
/// Items left over on one side after the other is exhausted join the last
/// unit.
template <class Head, class Closes, class Grow>
std::vector<AlignmentUnit> align_sequences(std::size_t n_gold,
                                           std::size_t n_sys, Head&& head,
                                           Closes&& closes, Grow&& grow) {
  if ((n_gold == 0) != (n_sys == 0)) {
    throw std::invalid_argument(
        "cannot align an empty sequence with a non-empty one");
  }
  std::vector<AlignmentUnit> units;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n_gold && j < n_sys) {
    AlignmentUnit unit;
    if (const std::optional<Step> step = head(i, j)) {
      for (std::size_t k = 0; k < step->gold && i < n_gold; ++k) {
        unit.gold_items.push_back(i++);
      }
      for (std::size_t k = 0; k < step->system && j < n_sys; ++k) {
        unit.sys_items.push_back(j++);
      }
    } else {
      unit.gold_items.push_back(i++);
      unit.sys_items.push_back(j++);
      while (true) {
        if (i == n_gold || j == n_sys) {
          while (i < n_gold) unit.gold_items.push_back(i++);
          while (j < n_sys) unit.sys_items.push_back(j++);
          break;
        }
        if (closes(i, j, static_cast<const AlignmentUnit&>(unit))) break;
        if (grow(static_cast<const AlignmentUnit&>(unit)) == Side::gold) {
          unit.gold_items.push_back(i++);
        } else {
          unit.sys_items.push_back(j++);
        }
      }
    }
    units.push_back(std::move(unit));
  }
  while (i < n_gold) units.back().gold_items.push_back(i++);
  while (j < n_sys) units.back().sys_items.push_back(j++);
  return units;
}

/// Plain form of the greedy alignment: one predicate both opens 1-to-1 units
/// and closes accumulated ones.
template <class Matched, class Grow>
std::vector<AlignmentUnit> align_sequences(std::size_t n_gold,
                                           std::size_t n_sys,
                                           Matched&& matched, Grow&& grow) {
  return align_sequences(
      n_gold, n_sys,
      [&](std::size_t i, std::size_t j) -> std::optional<Step> {
        if (matched(i, j)) return Step{};
        return std::nullopt;
      },
      [&](std::size_t i, std::size_t j, const AlignmentUnit&) {
        return static_cast<bool>(matched(i, j));
      },
      grow);
}

/// Aligns sentences (each given as its token sequence) across files whose
/// sentence boundaries may differ. Throws std::invalid_argument when exactly
/// one side is empty.
std::vector<AlignmentUnit> align_sentences(
    std::span<const std::vector<std::string>> gold_sentences,
    std::span<const std::vector<std::string>> sys_sentences,
    const SimilarityConfig& config);

/// Aligns the tokens of one aligned sentence pair.
std::vector<AlignmentUnit> align_words(std::span<const std::string> gold,
                                       std::span<const std::string> sys,
                                       const SimilarityConfig& config);

}  // namespace jpevalb
