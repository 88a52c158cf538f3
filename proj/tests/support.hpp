#pragma once

// Test helpers: fixture access, independent oracles, random generators.

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "jpevalb/constituents.hpp"
#include "jpevalb/tree.hpp"

namespace testing {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(JPEVALB_FIXTURE_DIR) / name;
}

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void spit(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

inline jpevalb::SyntaxTree tree(const std::string& text) {
  return jpevalb::parse_bracketed(text).at(0);
}

inline std::vector<jpevalb::SyntaxTree> trees_of(const std::filesystem::path& p) {
  return jpevalb::parse_bracketed(slurp(p));
}

inline std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

struct ProcessResult {
  int status = -1;
  std::string out;
  std::string err;
};

// Runs a shell command, capturing stdout and stderr separately.
inline ProcessResult run_command(const std::string& command) {
  static int counter = 0;
  const auto dir = std::filesystem::temp_directory_path();
  const auto err_path =
      dir / ("jpevalb_err_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
  ProcessResult r;
  FILE* pipe = ::popen((command + " 2>" + err_path.string()).c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.err = slurp(err_path);
  std::filesystem::remove(err_path);
  return r;
}

inline std::string quote(const std::filesystem::path& p) {
  return "'" + p.string() + "'";
}

// Full-matrix Levenshtein over code points; UTF-8 decoded naively (inputs
// are valid UTF-8).
inline std::vector<char32_t> code_points(const std::string& s) {
  std::vector<char32_t> out;
  for (std::size_t i = 0; i < s.size();) {
    const auto c = static_cast<unsigned char>(s[i]);
    int len = c < 0x80 ? 1 : c < 0xE0 ? 2 : c < 0xF0 ? 3 : 4;
    char32_t cp = len == 1 ? c : len == 2 ? (c & 0x1F) : len == 3 ? (c & 0x0F) : (c & 0x07);
    for (int k = 1; k < len; ++k) cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3F);
    out.push_back(cp);
    i += static_cast<std::size_t>(len);
  }
  return out;
}

inline std::size_t levenshtein_oracle(const std::string& a, const std::string& b) {
  const auto x = code_points(a);
  const auto y = code_points(b);
  std::vector<std::vector<std::size_t>> d(x.size() + 1,
                                          std::vector<std::size_t>(y.size() + 1));
  for (std::size_t i = 0; i <= x.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= y.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    for (std::size_t j = 1; j <= y.size(); ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (x[i - 1] == y[j - 1] ? 0u : 1u)});
    }
  }
  return d[x.size()][y.size()];
}

// Multiset intersection size of (label, start, end) triples by sorting.
inline std::size_t matched_oracle(const jpevalb::ConstituentSet& gold,
                                  const jpevalb::ConstituentSet& sys) {
  using Key = std::tuple<std::string, std::size_t, std::size_t>;
  std::vector<Key> g, s;
  for (const auto& c : gold) g.emplace_back(c.label, c.start, c.end);
  for (const auto& c : sys) s.emplace_back(c.label, c.start, c.end);
  std::sort(g.begin(), g.end());
  std::sort(s.begin(), s.end());
  std::vector<Key> both;
  std::set_intersection(g.begin(), g.end(), s.begin(), s.end(),
                        std::back_inserter(both));
  return both.size();
}

// Pairwise check: a system span crosses a gold span when they overlap and
// neither contains the other.
inline std::size_t crossing_oracle(const jpevalb::ConstituentSet& gold,
                                   const jpevalb::ConstituentSet& sys) {
  std::size_t n = 0;
  for (const auto& s : sys) {
    bool any = false;
    for (const auto& g : gold) {
      const bool overlap = g.start < s.end && s.start < g.end;
      const bool g_in_s = s.start <= g.start && g.end <= s.end;
      const bool s_in_g = g.start <= s.start && s.end <= g.end;
      if (overlap && !g_in_s && !s_in_g) any = true;
    }
    n += any ? 1 : 0;
  }
  return n;
}

// Random tree over the given words; phrase labels drawn from labels.
class TreeGen {
 public:
  explicit TreeGen(unsigned seed) : rng_(seed) {}

  std::mt19937& rng() { return rng_; }

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  std::string word() {
    static const std::vector<std::string> pool = {
        "the", "a", "dog", "cat", "saw", "ran", "quickly", "big", "it", "of",
        "in", "park", "John", "Mary", "said", "n't", "ca", "will", "be", "red"};
    return pool[uniform(0, pool.size() - 1)];
  }

  std::string tag() {
    static const std::vector<std::string> pool = {"DT", "NN", "VBD", "RB", "JJ",
                                                  "IN", "NNP", "PRP", "MD", "VB"};
    return pool[uniform(0, pool.size() - 1)];
  }

  std::string label() {
    static const std::vector<std::string> pool = {"NP", "VP", "PP", "S", "ADJP",
                                                  "SBAR", "NP-SBJ", "ADVP"};
    return pool[uniform(0, pool.size() - 1)];
  }

  // Random bracketing of the given leaves [lo, hi).
  jpevalb::SyntaxTree build(const std::vector<jpevalb::SyntaxTree>& leaves,
                            std::size_t lo, std::size_t hi, int depth = 0) {
    if (hi - lo == 1 && (depth > 0 && uniform(0, 2) != 0)) return leaves[lo];
    std::vector<jpevalb::SyntaxTree> kids;
    std::size_t at = lo;
    while (at < hi) {
      const std::size_t width = uniform(1, hi - at);
      if (width == hi - lo) {
        // Avoid infinite unary chains; split into single leaves.
        for (std::size_t k = at; k < hi; ++k) kids.push_back(leaves[k]);
        break;
      }
      kids.push_back(width == 1 && uniform(0, 1) == 0 ? leaves[at]
                                                      : build(leaves, at, at + width, depth + 1));
      at += width;
    }
    return jpevalb::SyntaxTree::phrase(label(), std::move(kids));
  }

  std::vector<jpevalb::SyntaxTree> leaves(std::size_t n) {
    std::vector<jpevalb::SyntaxTree> out;
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(jpevalb::SyntaxTree::preterminal(tag(), word()));
    }
    return out;
  }

  jpevalb::SyntaxTree random_tree(std::size_t n) {
    const auto l = leaves(n);
    return build(l, 0, n);
  }

 private:
  std::mt19937 rng_;
};

}  // namespace testing
