#include "jpevalb/alignment.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

namespace jpevalb {

namespace {

bool is_space(unsigned char c) { return std::isspace(c) != 0; }

// Invalid sequences map each byte into the low-surrogate range so they stay
// distinct from real characters.
std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    std::size_t extra = 0;
    char32_t cp = 0;
    if (lead < 0x80) {
      cp = lead;
    } else if ((lead & 0xE0) == 0xC0) {
      extra = 1;
      cp = lead & 0x1F;
    } else if ((lead & 0xF0) == 0xE0) {
      extra = 2;
      cp = lead & 0x0F;
    } else if ((lead & 0xF8) == 0xF0) {
      extra = 3;
      cp = lead & 0x07;
    } else {
      out.push_back(0xDC00 + lead);
      ++i;
      continue;
    }
    bool valid = i + extra < text.size();
    for (std::size_t k = 1; valid && k <= extra; ++k) {
      const auto cont = static_cast<unsigned char>(text[i + k]);
      if ((cont & 0xC0) != 0x80) {
        valid = false;
      } else {
        cp = (cp << 6) | (cont & 0x3F);
      }
    }
    if (!valid) {
      out.push_back(0xDC00 + lead);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

bool prefix_related(std::string_view a, std::string_view b) {
  return a.size() <= b.size() ? b.starts_with(a) : a.starts_with(b);
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_space(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && is_space(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Length of the run of tokens starting at start whose concatenation is
// exactly target, if any.
std::optional<std::size_t> run_matching(std::span<const std::string> tokens,
                                        std::size_t start,
                                        std::string_view target) {
  std::size_t used = 0;
  std::size_t k = start;
  while (k < tokens.size() && used < target.size()) {
    const std::string& tok = tokens[k];
    if (target.substr(used, tok.size()) != tok) return std::nullopt;
    used += tok.size();
    ++k;
  }
  if (used != target.size() || k == start) return std::nullopt;
  return k - start;
}

// Normalized tokens of one side plus the offsets of each token in the joined
// text; offsets has one extra trailing entry.
struct Joined {
  std::vector<std::string> tokens;
  std::string text;
  std::vector<std::size_t> offsets;
  std::vector<std::size_t> char_suffix;  // chars in tokens[k..]

  explicit Joined(std::span<const std::string> raw) {
    tokens.reserve(raw.size());
    offsets.reserve(raw.size() + 1);
    for (const auto& t : raw) {
      offsets.push_back(text.size());
      tokens.push_back(normalize_nospace(t));
      text += tokens.back();
    }
    offsets.push_back(text.size());
    char_suffix.assign(tokens.size() + 1, 0);
    for (std::size_t k = tokens.size(); k-- > 0;) {
      char_suffix[k] = char_suffix[k + 1] + char_length(tokens[k]);
    }
  }

  std::string_view suffix(std::size_t k) const {
    return std::string_view(text).substr(offsets[k]);
  }

  std::string_view span_text(const std::vector<std::size_t>& items) const {
    // items are consecutive.
    return std::string_view(text).substr(
        offsets[items.front()], offsets[items.back() + 1] - offsets[items.front()]);
  }
};

}  // namespace

void ExceptionList::add(std::string_view first, std::string_view second) {
  entries_.push_back({normalize_nospace(first), normalize_nospace(second)});
}

bool ExceptionList::contains(std::string_view first,
                             std::string_view second) const {
  const std::string a = normalize_nospace(first);
  const std::string b = normalize_nospace(second);
  return std::any_of(entries_.begin(), entries_.end(), [&](const Entry& e) {
    return (e.first == a && e.second == b) || (e.first == b && e.second == a);
  });
}

std::optional<std::pair<std::size_t, std::size_t>> ExceptionList::match_at(
    std::span<const std::string> gold, std::size_t i,
    std::span<const std::string> sys, std::size_t j) const {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  auto consider = [&](std::string_view g, std::string_view s) {
    const auto ng = run_matching(gold, i, g);
    if (!ng) return;
    const auto ns = run_matching(sys, j, s);
    if (!ns) return;
    if (!best || *ng + *ns > best->first + best->second) best = {{*ng, *ns}};
  };
  for (const auto& e : entries_) {
    consider(e.first, e.second);
    consider(e.second, e.first);
  }
  return best;
}

ExceptionListError::ExceptionListError(const std::string& message,
                                       std::size_t line,
                                       const std::string& source)
    : std::runtime_error((source.empty() ? "" : source + ": ") + "line " +
                         std::to_string(line) + ": " + message),
      message_(message),
      line_(line) {}

ExceptionList parse_exception_list(std::string_view text) {
  ExceptionList list;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;

    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      fields.push_back(trim(line.substr(start, tab - start)));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 2) {
      throw ExceptionListError("expected 2 tab-separated fields, found " +
                                   std::to_string(fields.size()),
                               line_no);
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw ExceptionListError("empty field", line_no);
    }
    list.add(fields[0], fields[1]);
  }
  return list;
}

ExceptionList load_exception_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_exception_list(buffer.str());
  } catch (const ExceptionListError& e) {
    throw ExceptionListError(e.message(), e.line(), path.string());
  }
}

std::string normalize_nospace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (is_space(u)) continue;
    out.push_back(u >= 'A' && u <= 'Z' ? static_cast<char>(u - 'A' + 'a') : c);
  }
  return out;
}

std::size_t char_length(std::string_view text) {
  return decode_utf8(text).size();
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::u32string x = decode_utf8(a);
  std::u32string y = decode_utf8(b);

  // Common prefix and suffix never contribute.
  std::size_t lo = 0;
  while (lo < x.size() && lo < y.size() && x[lo] == y[lo]) ++lo;
  std::size_t hx = x.size();
  std::size_t hy = y.size();
  while (hx > lo && hy > lo && x[hx - 1] == y[hy - 1]) {
    --hx;
    --hy;
  }
  const std::u32string_view s(x.data() + lo, hx - lo);
  const std::u32string_view t(y.data() + lo, hy - lo);
  if (s.empty()) return t.size();
  if (t.empty()) return s.size();

  std::vector<std::size_t> row(t.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t r = 1; r <= s.size(); ++r) {
    std::size_t diag = row[0];
    row[0] = r;
    for (std::size_t c = 1; c <= t.size(); ++c) {
      const std::size_t up = row[c];
      const std::size_t sub = diag + (s[r - 1] == t[c - 1] ? 0 : 1);
      row[c] = std::min({up + 1, row[c - 1] + 1, sub});
      diag = up;
    }
  }
  return row[t.size()];
}

bool similar(std::string_view a, std::string_view b,
             const SimilarityConfig& config) {
  if (a == b) return true;
  const std::size_t la = char_length(a);
  const std::size_t lb = char_length(b);
  const auto longest = static_cast<double>(std::max(la, lb));
  const auto gap = static_cast<double>(la > lb ? la - lb : lb - la);
  // The length gap is a lower bound on the distance.
  if (gap / longest >= config.ratio_threshold) return false;
  return static_cast<double>(edit_distance(a, b)) / longest <
         config.ratio_threshold;
}

std::vector<AlignmentUnit> align_sentences(
    std::span<const std::vector<std::string>> gold_sentences,
    std::span<const std::vector<std::string>> sys_sentences,
    const SimilarityConfig& config) {
  auto flatten = [](std::span<const std::vector<std::string>> sents) {
    std::vector<std::string> texts;
    std::vector<std::size_t> lengths;
    texts.reserve(sents.size());
    for (const auto& s : sents) {
      std::string joined;
      for (const auto& tok : s) joined += normalize_nospace(tok);
      lengths.push_back(char_length(joined));
      texts.push_back(std::move(joined));
    }
    return std::pair{std::move(texts), std::move(lengths)};
  };
  const auto [gold, gold_len] = flatten(gold_sentences);
  const auto [sys, sys_len] = flatten(sys_sentences);
  const std::size_t n = gold.size();
  const std::size_t m = sys.size();

  auto equal_or_similar = [&](std::size_t i, std::size_t j) {
    return gold[i] == sys[j] || similar(gold[i], sys[j], config);
  };
  auto matched = [&](std::size_t i, std::size_t j) {
    if (gold[i] == sys[j]) return true;
    if (!similar(gold[i], sys[j], config)) return false;
    if (i + 1 == n && j + 1 == m) return true;
    if (i + 1 < n && j + 1 < m) return equal_or_similar(i + 1, j + 1);
    return false;
  };
  auto grow = [&](const AlignmentUnit& unit) {
    std::size_t g = 0;
    std::size_t s = 0;
    for (auto k : unit.gold_items) g += gold_len[k];
    for (auto k : unit.sys_items) s += sys_len[k];
    return g < s ? Side::gold : Side::system;
  };
  return align_sequences(n, m, matched, grow);
}

std::vector<AlignmentUnit> align_words(std::span<const std::string> gold,
                                       std::span<const std::string> sys,
                                       const SimilarityConfig& config) {
  const Joined l(gold);
  const Joined r(sys);
  const std::size_t n = l.tokens.size();
  const std::size_t m = r.tokens.size();
  const ExceptionList& exceptions = config.exceptions;

  auto listed_at = [&](std::size_t i, std::size_t j) {
    return exceptions.empty()
               ? std::nullopt
               : exceptions.match_at(l.tokens, i, r.tokens, j);
  };
  auto equal = [&](std::size_t i, std::size_t j) {
    return l.tokens[i] == r.tokens[j] ||
           (!exceptions.empty() && exceptions.contains(l.tokens[i], r.tokens[j]));
  };

  auto head = [&](std::size_t i, std::size_t j) -> std::optional<Step> {
    if (l.tokens[i] == r.tokens[j]) return Step{};
    if (const auto listed = listed_at(i, j)) {
      return Step{listed->first, listed->second};
    }
    // A one-token substitution: the current pair differs outright (neither
    // is a prefix of the other) and the following pair agrees.
    if (prefix_related(l.tokens[i], r.tokens[j])) return std::nullopt;
    if (i + 1 == n && j + 1 == m) return Step{};
    if (i + 1 < n && j + 1 < m && equal(i + 1, j + 1)) return Step{};
    return std::nullopt;
  };

  auto closes = [&](std::size_t i, std::size_t j, const AlignmentUnit& unit) {
    if (!equal(i, j) && !listed_at(i, j)) return false;
    const std::string_view acc_gold = l.span_text(unit.gold_items);
    const std::string_view acc_sys = r.span_text(unit.sys_items);
    // While one accumulated text is still a prefix of the other the groups
    // describe the same characters and must be grown until they agree,
    // unless the rest of both sentences already agrees.
    if (acc_gold == acc_sys || !prefix_related(acc_gold, acc_sys)) return true;
    return l.suffix(i) == r.suffix(j);
  };

  auto grow = [&](const AlignmentUnit& unit) {
    const std::size_t rest_gold = l.char_suffix[unit.gold_items.back() + 1];
    const std::size_t rest_sys = r.char_suffix[unit.sys_items.back() + 1];
    return rest_gold > rest_sys ? Side::gold : Side::system;
  };

  return align_sequences(n, m, head, closes, grow);
}

}  // namespace jpevalb
