#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jpevalb {

/// Label given to an unlabeled outermost bracket, e.g. "( (S ...) )".
inline constexpr std::string_view kTopLabel = "TOP";

/// Raised for malformed bracketed input. offset() is a byte offset into the
/// parsed text (equal to its size for errors detected at end of input).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset,
             const std::string& source = {});

  const std::string& message() const noexcept { return message_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::string message_;
  std::size_t offset_;
};

/// A labeled ordered tree. Preterminals carry a word and no children;
/// phrase nodes carry one or more children and no word.
struct SyntaxTree {
  std::string label;
  std::vector<SyntaxTree> children;
  std::optional<std::string> word;

  static SyntaxTree preterminal(std::string tag, std::string form);
  static SyntaxTree phrase(std::string label, std::vector<SyntaxTree> children);

  bool is_preterminal() const noexcept { return word.has_value(); }

  friend bool operator==(const SyntaxTree&, const SyntaxTree&) = default;
};

struct TokenLeaf {
  std::string form;
  std::string tag;
  std::size_t index = 0;

  friend bool operator==(const TokenLeaf&, const TokenLeaf&) = default;
};

/// Parses zero or more whitespace-separated bracketed trees.
///
/// Trees may span lines and several may share a line; blank lines carry no
/// meaning. A root bracket without a label becomes a node labeled TOP.
/// Word forms are kept verbatim (-LRB- stays -LRB-), and so are labels with
/// functional annotations such as NP-SBJ.
std::vector<SyntaxTree> parse_bracketed(std::string_view input);

/// Reads and parses a whole treebank file. I/O failures throw
/// std::runtime_error; ParseError messages are prefixed with the path.
std::vector<SyntaxTree> read_treebank(const std::filesystem::path& path);

/// Left-to-right preterminals, indexed 0..n-1.
std::vector<TokenLeaf> leaves(const SyntaxTree& tree);

/// Word forms only, in order.
std::vector<std::string> words(const SyntaxTree& tree);

/// Single-line bracketed form. Throws std::invalid_argument when a label or
/// word is empty or contains whitespace or parentheses, or when a node is
/// neither a preterminal nor a phrase with children.
std::string render_bracketed(const SyntaxTree& tree);

}  // namespace jpevalb
