#include "jpevalb/tree.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

namespace jpevalb {

namespace {

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool is_delimiter(char c) { return is_space(c) || c == '(' || c == ')'; }

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SyntaxTree> read_all() {
    std::vector<SyntaxTree> trees;
    while (true) {
      skip_space();
      if (at_end()) break;
      if (peek() != '(') {
        fail(peek() == ')' ? "unmatched closing bracket"
                           : "expected '(' at top level");
      }
      trees.push_back(read_node(/*root=*/true));
    }
    return trees;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && is_space(peek())) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }

  std::string read_atom() {
    const std::size_t start = pos_;
    while (!at_end() && !is_delimiter(peek())) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // Expects pos_ at '('. Returns after consuming the matching ')'.
  SyntaxTree read_node(bool root) {
    const std::size_t open = pos_;
    ++pos_;
    std::string label = read_atom();
    skip_space();
    if (at_end()) {
      pos_ = text_.size();
      fail("unexpected end of input: " + std::to_string(depth_ + 1) +
           " unclosed bracket(s)");
    }

    if (peek() != '(' && peek() != ')') {
      if (label.empty()) fail("missing label before word");
      std::string form = read_atom();
      skip_space();
      if (at_end()) {
        fail("unexpected end of input: " + std::to_string(depth_ + 1) +
             " unclosed bracket(s)");
      }
      if (peek() != ')') fail("preterminal '" + label + "' has more than one word");
      ++pos_;
      return SyntaxTree::preterminal(std::move(label), std::move(form));
    }

    if (label.empty()) {
      if (!root) {
        pos_ = open;
        fail("empty label on a non-root bracket");
      }
      label = std::string(kTopLabel);
    }

    std::vector<SyntaxTree> children;
    ++depth_;
    while (true) {
      skip_space();
      if (at_end()) {
        fail("unexpected end of input: " + std::to_string(depth_) +
             " unclosed bracket(s)");
      }
      if (peek() == ')') break;
      if (peek() != '(') fail("word inside phrase '" + label + "'");
      children.push_back(read_node(/*root=*/false));
    }
    --depth_;
    if (children.empty()) {
      pos_ = open;
      fail("bracket '" + label + "' has neither word nor children");
    }
    ++pos_;
    return SyntaxTree::phrase(std::move(label), std::move(children));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

void collect_leaves(const SyntaxTree& node, std::vector<TokenLeaf>& out) {
  if (node.is_preterminal()) {
    out.push_back({*node.word, node.label, out.size()});
    return;
  }
  for (const auto& child : node.children) collect_leaves(child, out);
}

void check_atom(std::string_view atom, std::string_view what) {
  if (atom.empty()) {
    throw std::invalid_argument("empty " + std::string(what));
  }
  for (char c : atom) {
    if (is_delimiter(c)) {
      throw std::invalid_argument(std::string(what) + " '" + std::string(atom) +
                                  "' contains whitespace or a bracket");
    }
  }
}

void render_into(const SyntaxTree& node, std::string& out) {
  check_atom(node.label, "label");
  out += '(';
  out += node.label;
  if (node.is_preterminal()) {
    if (!node.children.empty()) {
      throw std::invalid_argument("node '" + node.label +
                                  "' has both a word and children");
    }
    check_atom(*node.word, "word");
    out += ' ';
    out += *node.word;
  } else {
    if (node.children.empty()) {
      throw std::invalid_argument("node '" + node.label +
                                  "' has neither word nor children");
    }
    for (const auto& child : node.children) {
      out += ' ';
      render_into(child, out);
    }
  }
  out += ')';
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t offset,
                       const std::string& source)
    : std::runtime_error((source.empty() ? "" : source + ": ") + "byte " +
                         std::to_string(offset) + ": " + message),
      message_(message),
      offset_(offset) {}

SyntaxTree SyntaxTree::preterminal(std::string tag, std::string form) {
  SyntaxTree t;
  t.label = std::move(tag);
  t.word = std::move(form);
  return t;
}

SyntaxTree SyntaxTree::phrase(std::string label,
                              std::vector<SyntaxTree> children) {
  SyntaxTree t;
  t.label = std::move(label);
  t.children = std::move(children);
  return t;
}

std::vector<SyntaxTree> parse_bracketed(std::string_view input) {
  return Reader(input).read_all();
}

std::vector<SyntaxTree> read_treebank(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw std::runtime_error("cannot read " + path.string());
  }
  const std::string text = buffer.str();
  try {
    return parse_bracketed(text);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), e.offset(), path.string());
  }
}

std::vector<TokenLeaf> leaves(const SyntaxTree& tree) {
  std::vector<TokenLeaf> out;
  collect_leaves(tree, out);
  return out;
}

std::vector<std::string> words(const SyntaxTree& tree) {
  std::vector<std::string> out;
  for (auto& leaf : leaves(tree)) out.push_back(std::move(leaf.form));
  return out;
}

std::string render_bracketed(const SyntaxTree& tree) {
  std::string out;
  render_into(tree, out);
  return out;
}

}  // namespace jpevalb
