#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jpevalb/alignment.hpp"
#include "jpevalb/tree.hpp"

namespace jpevalb {

inline constexpr std::string_view kDummyRootLabel = "@S";

/// A labeled span [start, end) with the surface text it covers.
struct Constituent {
  std::string label;
  std::size_t start = 0;
  std::size_t end = 0;
  std::vector<std::string> tokens;

  friend bool operator==(const Constituent&, const Constituent&) = default;
};

/// Pre-order listing; duplicates are kept.
using ConstituentSet = std::vector<Constituent>;

/// Returns the single tree unchanged, otherwise a new dummy-labeled root over
/// all trees in order. Throws std::invalid_argument for an empty input.
SyntaxTree merge_with_dummy_root(std::span<const SyntaxTree> trees,
                                 std::string_view dummy_label = kDummyRootLabel);

/// One entry per phrase node, in pre-order, skipping nodes labeled TOP or the
/// dummy root label. Spans are token indices shifted by offset; tokens holds
/// the covered word forms.
ConstituentSet extract_constituents(const SyntaxTree& tree,
                                    std::size_t offset = 0);

/// Label with any functional annotation removed: everything from the first
/// '-' or '=' after the first character ("NP-SBJ-1" -> "NP", "-NONE-" stays).
std::string base_label(std::string_view label);

/// Moves token-coordinate constituents onto alignment-unit coordinates.
///
/// forms are the word forms of the side named by side; each unit's text is
/// the normalized concatenation of that side's items. start maps to the unit
/// holding the first covered token and end to one past the unit holding the
/// last. Throws std::logic_error when a token lies in no unit.
ConstituentSet remap_to_alignment_units(const ConstituentSet& raw,
                                        std::span<const AlignmentUnit> units,
                                        Side side,
                                        std::span<const std::string> forms);

}  // namespace jpevalb
