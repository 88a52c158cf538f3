#include "jpevalb/constituents.hpp"

#include <stdexcept>

namespace jpevalb {

namespace {

bool is_wrapper(std::string_view label) {
  return label == kTopLabel || label == kDummyRootLabel;
}

// Returns the number of tokens under node.
std::size_t collect(const SyntaxTree& node, std::size_t start,
                    std::vector<std::string>& forms, ConstituentSet& out) {
  if (node.is_preterminal()) {
    forms.push_back(*node.word);
    return 1;
  }
  std::size_t slot = out.size();
  const bool listed = !is_wrapper(node.label);
  if (listed) out.push_back({node.label, start, start, {}});
  std::size_t width = 0;
  for (const auto& child : node.children) {
    width += collect(child, start + width, forms, out);
  }
  if (listed) out[slot].end = start + width;
  return width;
}

}  // namespace

SyntaxTree merge_with_dummy_root(std::span<const SyntaxTree> trees,
                                 std::string_view dummy_label) {
  if (trees.empty()) {
    throw std::invalid_argument("cannot merge an empty tree group");
  }
  if (trees.size() == 1) return trees.front();
  return SyntaxTree::phrase(std::string(dummy_label),
                            std::vector<SyntaxTree>(trees.begin(), trees.end()));
}

ConstituentSet extract_constituents(const SyntaxTree& tree,
                                    std::size_t offset) {
  ConstituentSet out;
  std::vector<std::string> forms;
  collect(tree, 0, forms, out);
  for (auto& c : out) {
    c.tokens.assign(forms.begin() + static_cast<std::ptrdiff_t>(c.start),
                    forms.begin() + static_cast<std::ptrdiff_t>(c.end));
    c.start += offset;
    c.end += offset;
  }
  return out;
}

std::string base_label(std::string_view label) {
  if (!label.empty() && label.front() == '-') return std::string(label);  // -NONE-, -LRB-
  const std::size_t cut = label.find_first_of("-=", 1);
  return std::string(label.substr(0, cut));
}

ConstituentSet remap_to_alignment_units(const ConstituentSet& raw,
                                        std::span<const AlignmentUnit> units,
                                        Side side,
                                        std::span<const std::string> forms) {
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> unit_of(forms.size(), none);
  std::vector<std::string> unit_text(units.size());
  for (std::size_t u = 0; u < units.size(); ++u) {
    const auto& items =
        side == Side::gold ? units[u].gold_items : units[u].sys_items;
    for (std::size_t k : items) {
      if (k >= forms.size()) {
        throw std::logic_error("alignment unit refers to token " +
                               std::to_string(k) + " beyond the sentence");
      }
      unit_of[k] = u;
      unit_text[u] += normalize_nospace(forms[k]);
    }
  }

  ConstituentSet out;
  out.reserve(raw.size());
  for (const auto& c : raw) {
    if (c.start >= c.end || c.end > forms.size() ||
        unit_of[c.start] == none || unit_of[c.end - 1] == none) {
      throw std::logic_error("constituent " + c.label + " (" +
                             std::to_string(c.start) + "," +
                             std::to_string(c.end) +
                             ") is not covered by the alignment");
    }
    Constituent m{c.label, unit_of[c.start], unit_of[c.end - 1] + 1, {}};
    m.tokens.assign(unit_text.begin() + static_cast<std::ptrdiff_t>(m.start),
                    unit_text.begin() + static_cast<std::ptrdiff_t>(m.end));
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace jpevalb
