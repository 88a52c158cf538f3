#include "jpevalb/legacy.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace jpevalb {

namespace {

bool contains(const std::vector<std::string>& set, std::string_view s) {
  return std::find(set.begin(), set.end(), s) != set.end();
}

bool pair_equal(const std::vector<std::pair<std::string, std::string>>& pairs,
                std::string_view a, std::string_view b) {
  if (a == b) return true;
  return std::any_of(pairs.begin(), pairs.end(), [&](const auto& p) {
    return (a == p.first && b == p.second) || (a == p.second && b == p.first);
  });
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Whitespace-separated fields of s.
std::vector<std::string> fields(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    const std::size_t b = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > b) out.emplace_back(s.substr(b, i - b));
  }
  return out;
}

// evalb's view of one sentence.
struct Terminal {
  std::string word;
  std::string label;
};

struct Bracket {
  std::string label;
  int start = 0;
  int end = 0;
  int result = 0;  // 5 = deleted, 1 = matched
};

struct QuoteTerm {
  Terminal term;
  int index = 0;
  int bracket = 0;
  std::vector<int> ends;  // brackets open at the quote
};

struct Sentence {
  std::vector<Terminal> terminals;
  std::vector<Bracket> brackets;
  std::vector<QuoteTerm> quotes;
  int length = 0;
};

bool is_quote_term(const ParamSet& params, const std::string& label,
                   const std::string& word) {
  return contains(params.quote_labels, label) &&
         (word == "'" || word == "\"" || word == "/");
}

void read_node(const SyntaxTree& node, const ParamSet& params, Sentence& s,
               std::vector<int>& stack) {
  if (node.is_preterminal()) {
    const std::string& word = *node.word;
    if (!params.is_delete_label_for_length(node.label)) ++s.length;
    if (is_quote_term(params, node.label, word)) {
      s.quotes.push_back({{word, node.label},
                          static_cast<int>(s.terminals.size()),
                          static_cast<int>(s.brackets.size()),
                          stack});
    }
    if (!params.is_delete_label(node.label)) {
      s.terminals.push_back({word, node.label});
    }
    return;
  }
  const int bid = static_cast<int>(s.brackets.size());
  s.brackets.push_back({node.label, static_cast<int>(s.terminals.size()), 0, 0});
  stack.push_back(bid);
  for (const auto& child : node.children) read_node(child, params, s, stack);
  stack.pop_back();
  s.brackets[static_cast<std::size_t>(bid)].end =
      static_cast<int>(s.terminals.size());
}

Sentence read_sentence(std::span<const SyntaxTree> trees,
                       const ParamSet& params) {
  Sentence s;
  std::vector<int> stack;
  for (const auto& tree : trees) read_node(tree, params, s, stack);
  return s;
}

void reinsert_term(const QuoteTerm& quote, Sentence& s) {
  const auto at = static_cast<std::size_t>(
      std::min<int>(quote.index, static_cast<int>(s.terminals.size())));
  s.terminals.insert(s.terminals.begin() + static_cast<std::ptrdiff_t>(at),
                     quote.term);
  for (std::size_t k = 0; k < s.brackets.size(); ++k) {
    if (static_cast<int>(k) >= quote.bracket) {
      ++s.brackets[k].start;
      ++s.brackets[k].end;
    }
  }
  for (int b : quote.ends) ++s.brackets[static_cast<std::size_t>(b)].end;
}

// Restores quote terminals deleted on one side only, so that tokenization
// differences of quote characters do not cause a length mismatch.
void fix_quote(Sentence& gold, Sentence& test, const ParamSet& params) {
  for (std::size_t i = 0; i < test.quotes.size(); ++i) {
    const int ind = test.quotes[i].index;
    for (std::size_t j = 0; j < gold.quotes.size(); ++j) {
      QuoteTerm& g = gold.quotes[j];
      QuoteTerm& t = test.quotes[i];
      if (g.index != ind || g.term.label == t.term.label) continue;
      const bool g_del = params.is_delete_label(g.term.label);
      const bool t_del = params.is_delete_label(t.term.label);
      if (g_del && !t_del) {
        reinsert_term(g, gold);
        for (std::size_t k = j; k < gold.quotes.size(); ++k) ++gold.quotes[k].index;
      } else if (t_del && !g_del) {
        reinsert_term(t, test);
        for (std::size_t k = i; k < test.quotes.size(); ++k) ++test.quotes[k].index;
      }
    }
  }
}

void modify_label(std::string& label) {
  const std::size_t cut = label.find_first_of("-=");
  if (cut != std::string::npos) label.resize(cut);
}

// Marks empty and deleted brackets; returns the number left.
int massage(std::vector<Bracket>& brackets, const ParamSet& params) {
  int real = 0;
  for (auto& b : brackets) {
    b.result = 0;
    if (b.start == b.end) {
      b.result = 5;
      continue;
    }
    modify_label(b.label);
    for (const auto& d : params.delete_labels) {
      if (params.label_equal(b.label, d)) b.result = 5;
    }
  }
  for (const auto& b : brackets) {
    if (b.result != 5) ++real;
  }
  return real;
}

double percent(int num, int den) {
  return den == 0 ? 0.0 : 100.0 * num / den;
}

}  // namespace

ParamSet ParamSet::collins() {
  ParamSet p;
  p.debug = 0;
  p.max_error = 10;
  p.cutoff_len = 40;
  p.labeled = true;
  p.delete_labels = {"TOP", "-NONE-", ",", ":", "``", "''", "."};
  p.delete_labels_for_length = {"-NONE-"};
  p.eq_labels = {{"ADVP", "PRT"}};
  return p;
}

bool ParamSet::label_equal(std::string_view a, std::string_view b) const {
  return pair_equal(eq_labels, a, b);
}

bool ParamSet::word_equal(std::string_view a, std::string_view b) const {
  return pair_equal(eq_words, a, b);
}

bool ParamSet::is_delete_label(std::string_view label) const {
  return contains(delete_labels, label);
}

bool ParamSet::is_delete_label_for_length(std::string_view label) const {
  return contains(delete_labels_for_length, label);
}

PrmError::PrmError(const std::string& message, std::size_t line,
                   const std::string& source)
    : std::runtime_error((source.empty() ? "" : source + ": ") + "line " +
                         std::to_string(line) + ": " + message),
      message_(message),
      line_(line) {}

ParamSet parse_prm(std::string_view text, std::vector<std::string>* warnings) {
  ParamSet p;
  auto warn = [&](std::size_t line, const std::string& what) {
    if (warnings) warnings->push_back("line " + std::to_string(line) + ": " + what);
  };
  auto integer = [&](std::size_t line, const std::string& key,
                     std::string_view value) {
    int v = 0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (first == last || ec != std::errc() || ptr != last) {
      throw PrmError(key + " expects an integer, got '" + std::string(value) + "'",
                     line);
    }
    return v;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    while (line.size() > 1 && is_space(line.back())) line.remove_suffix(1);
    if (line.empty() || line.front() == '#' || line.size() < 3) continue;

    std::size_t k = 0;
    while (k < line.size() && !is_space(line[k])) ++k;
    const std::string key(line.substr(0, k));
    while (k < line.size() && is_space(line[k])) ++k;
    const std::string_view value = line.substr(k);
    if (value.empty()) warn(line_no, "empty value for " + key);

    if (key == "DEBUG") {
      p.debug = integer(line_no, key, value);
    } else if (key == "MAX_ERROR") {
      p.max_error = integer(line_no, key, value);
    } else if (key == "CUTOFF_LEN") {
      p.cutoff_len = integer(line_no, key, value);
    } else if (key == "LABELED") {
      p.labeled = integer(line_no, key, value) != 0;
    } else if (key == "DELETE_LABEL") {
      p.delete_labels.emplace_back(value);
    } else if (key == "DELETE_LABEL_FOR_LENGTH") {
      p.delete_labels_for_length.emplace_back(value);
    } else if (key == "QUOTE_LABEL") {
      p.quote_labels.emplace_back(value);
    } else if (key == "EQ_LABEL" || key == "EQ_WORD") {
      const auto f = fields(value);
      if (f.size() != 2) {
        warn(line_no, key + " requires two values");
        continue;
      }
      (key == "EQ_LABEL" ? p.eq_labels : p.eq_words).emplace_back(f[0], f[1]);
    } else {
      warn(line_no, "unknown keyword (" + key + ")");
    }
  }
  return p;
}

std::vector<EvalbLine> parse_evalb_lines(std::string_view text) {
  std::vector<EvalbLine> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    try {
      lines.push_back(parse_bracketed(text.substr(pos, end - pos)));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lines.size() + 1) + ": " +
                           e.message(),
                       pos + e.offset());
    }
    pos = end + 1;
  }
  return lines;
}

std::vector<EvalbLine> read_evalb_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_evalb_lines(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(e.message(), e.offset(), path.string());
  }
}

ParamSet load_prm(const std::filesystem::path& path,
                  std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open parameter file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_prm(buffer.str(), warnings);
  } catch (const PrmError& e) {
    throw PrmError(e.message(), e.line(), path.string());
  }
}

FilteredTree apply_param_filters(const SyntaxTree& tree,
                                 const ParamSet& params) {
  Sentence s = read_sentence({&tree, 1}, params);
  massage(s.brackets, params);
  FilteredTree out;
  out.length = static_cast<std::size_t>(s.length);
  for (std::size_t i = 0; i < s.terminals.size(); ++i) {
    out.leaves.push_back({s.terminals[i].word, s.terminals[i].label, i});
  }
  for (const auto& b : s.brackets) {
    if (b.result == 5) continue;
    Constituent c{b.label, static_cast<std::size_t>(b.start),
                  static_cast<std::size_t>(b.end), {}};
    for (int i = b.start; i < b.end; ++i) {
      c.tokens.push_back(s.terminals[static_cast<std::size_t>(i)].word);
    }
    out.constituents.push_back(std::move(c));
  }
  return out;
}

LegacyResult legacy_score_pair(const SyntaxTree& gold, const SyntaxTree& sys,
                               const ParamSet& params) {
  return legacy_score_lines({&gold, 1}, {&sys, 1}, params);
}

LegacyResult legacy_score_lines(std::span<const SyntaxTree> gold,
                                std::span<const SyntaxTree> sys,
                                const ParamSet& params) {
  Sentence g = read_sentence(gold, params);
  Sentence t = read_sentence(sys, params);

  LegacyResult r;
  r.score.length = static_cast<std::size_t>(g.length);

  if (t.terminals.empty()) {
    r.score.status = Status::skip;
    return r;
  }

  auto fail = [&](std::string message) {
    r.score.status = Status::error;
    r.error = std::move(message);
    return r;
  };

  if (g.terminals.size() != t.terminals.size()) {
    fix_quote(g, t, params);
    if (g.terminals.size() != t.terminals.size()) {
      return fail("Length unmatch (" + std::to_string(g.terminals.size()) + "|" +
                  std::to_string(t.terminals.size()) + ")");
    }
  }
  for (std::size_t i = 0; i < g.terminals.size(); ++i) {
    if (!params.word_equal(g.terminals[i].word, t.terminals[i].word)) {
      return fail("Words unmatch (" + g.terminals[i].word + "|" +
                  t.terminals[i].word + ")");
    }
  }

  const int gold_n = massage(g.brackets, params);
  const int test_n = massage(t.brackets, params);

  int match = 0;
  for (auto& gb : g.brackets) {
    if (gb.result == 5) continue;
    for (auto& tb : t.brackets) {
      if (tb.result == 0 && gb.start == tb.start && gb.end == tb.end &&
          (!params.labeled || params.label_equal(gb.label, tb.label))) {
        gb.result = tb.result = 1;
        ++match;
        break;
      }
    }
  }

  int crossing = 0;
  for (const auto& tb : t.brackets) {
    if (tb.result == 5) continue;
    for (const auto& gb : g.brackets) {
      if (gb.result != 5 &&
          ((gb.start < tb.start && gb.end > tb.start && gb.end < tb.end) ||
           (gb.start > tb.start && gb.start < tb.end && gb.end > tb.end))) {
        ++crossing;
        break;
      }
    }
  }

  int correct = 0;
  for (std::size_t i = 0; i < g.terminals.size(); ++i) {
    if (params.label_equal(g.terminals[i].label, t.terminals[i].label)) ++correct;
  }

  const int words = static_cast<int>(g.terminals.size());
  r.score.recall = percent(match, gold_n);
  r.score.precision = percent(match, test_n);
  r.score.matched = static_cast<std::size_t>(match);
  r.score.gold_brackets = static_cast<std::size_t>(gold_n);
  r.score.test_brackets = static_cast<std::size_t>(test_n);
  r.score.crossing = static_cast<std::size_t>(crossing);
  r.score.words = static_cast<std::size_t>(words);
  r.score.correct_tags = static_cast<std::size_t>(correct);
  r.score.tag_accuracy = percent(correct, words);
  return r;
}

}  // namespace jpevalb
