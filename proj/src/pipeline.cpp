#include "jpevalb/pipeline.hpp"

#include "jpevalb/report.hpp"

namespace jpevalb {

std::vector<SentenceScore> evaluate_native(std::span<const SyntaxTree> gold,
                                           std::span<const SyntaxTree> sys,
                                           const SimilarityConfig& config) {
  std::vector<std::vector<std::string>> gold_words;
  std::vector<std::vector<std::string>> sys_words;
  gold_words.reserve(gold.size());
  sys_words.reserve(sys.size());
  for (const auto& t : gold) gold_words.push_back(words(t));
  for (const auto& t : sys) sys_words.push_back(words(t));

  const auto units = align_sentences(gold_words, sys_words, config);
  std::vector<SentenceScore> rows;
  rows.reserve(units.size());
  std::vector<SyntaxTree> gold_group;
  std::vector<SyntaxTree> sys_group;
  for (std::size_t u = 0; u < units.size(); ++u) {
    gold_group.clear();
    sys_group.clear();
    for (auto k : units[u].gold_items) gold_group.push_back(gold[k]);
    for (auto k : units[u].sys_items) sys_group.push_back(sys[k]);
    rows.push_back(score_group(gold_group, sys_group, config, u + 1));
  }
  return rows;
}

LegacyRun evaluate_legacy(std::span<const SyntaxTree> gold,
                          std::span<const SyntaxTree> sys,
                          const ParamSet& params) {
  auto lines = [](std::span<const SyntaxTree> trees) {
    std::vector<EvalbLine> out;
    out.reserve(trees.size());
    for (const auto& t : trees) out.push_back({t});
    return out;
  };
  return evaluate_legacy(lines(gold), lines(sys), params);
}

LegacyRun evaluate_legacy(std::span<const EvalbLine> gold,
                          std::span<const EvalbLine> sys,
                          const ParamSet& params) {
  LegacyRun run;
  int error_count = 0;
  // Mirrors evalb: the check happens before the count is incremented.
  auto error = [&](std::size_t line, const std::string& message) {
    run.diagnostics.push_back(std::to_string(line) + " : " + message);
    if (error_count++ > params.max_error) run.aborted = true;
    return run.aborted;
  };

  std::size_t line = 1;
  for (; line <= gold.size(); ++line) {
    if (line > sys.size()) {
      if (error(line, "Number of lines unmatch (too many lines in gold file)")) {
        return run;
      }
      break;
    }
    LegacyResult r = legacy_score_lines(gold[line - 1], sys[line - 1], params);
    r.score.id = line;
    if (r.error && error(line, *r.error)) return run;
    run.rows.push_back(r.score);
  }
  if (sys.size() > gold.size()) {
    error(line, "Number of lines unmatch (too many lines in test file)");
  }
  return run;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.prm_path && !config.legacy) {
      throw std::invalid_argument("a parameter file requires legacy mode");
    }
    std::vector<std::string> warnings;
    ParamSet params = ParamSet::collins();
    SimilarityConfig similarity;
    if (config.legacy && config.prm_path) {
      params = load_prm(*config.prm_path, &warnings);
    }
    if (config.exception_list_path) {
      if (config.legacy) {
        warnings.push_back("exception list ignored in legacy mode");
      } else {
        similarity.exceptions = load_exception_list(*config.exception_list_path);
      }
    }
    if (!config.legacy) {
      const auto gold = read_treebank(config.gold_path);
      const auto sys = read_treebank(config.system_path);
      for (const auto& w : warnings) err << "warning: " << w << '\n';
      const auto rows = evaluate_native(gold, sys, similarity);
      out << format_header();
      for (const auto& r : rows) out << format_row(r);
      out << format_summary(summarize(rows));
      return 0;
    }

    const auto gold = read_evalb_lines(config.gold_path);
    const auto sys = read_evalb_lines(config.system_path);
    for (const auto& w : warnings) err << "warning: " << w << '\n';
    const LegacyRun result = evaluate_legacy(gold, sys, params);
    for (const auto& d : result.diagnostics) err << d << '\n';
    out << format_header();
    for (const auto& r : result.rows) out << format_row(r);
    if (result.aborted) {
      err << "error: too many errors (MAX_ERROR " << params.max_error
          << "), evaluation aborted\n";
      return 1;
    }
    out << format_summary(summarize(result.rows, params.cutoff_len));
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace jpevalb
