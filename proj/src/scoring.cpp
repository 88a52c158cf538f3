#include "jpevalb/scoring.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace jpevalb {

namespace {

double ratio(std::size_t num, std::size_t den, double if_empty) {
  return den == 0 ? if_empty
                  : 100.0 * static_cast<double>(num) / static_cast<double>(den);
}

bool crosses(const Constituent& g, const Constituent& s) {
  return (g.start < s.start && g.end > s.start && g.end < s.end) ||
         (g.start > s.start && g.start < s.end && g.end > s.end);
}

}  // namespace

double SummaryBlock::recall() const {
  return ratio(total_matched, total_gold, 0.0);
}
double SummaryBlock::precision() const {
  return ratio(total_matched, total_test, 0.0);
}
double SummaryBlock::f1() const {
  const double p = precision();
  const double r = recall();
  return p + r == 0.0 ? 0.0 : 2 * p * r / (p + r);
}
double SummaryBlock::complete_match() const {
  return ratio(complete_sentences, valid_sentences, 0.0);
}
double SummaryBlock::average_crossing() const {
  return valid_sentences == 0 ? 0.0
                              : 1.0 * static_cast<double>(total_crossing) /
                                    static_cast<double>(valid_sentences);
}
double SummaryBlock::no_crossing() const {
  return ratio(no_crossing_sentences, valid_sentences, 0.0);
}
double SummaryBlock::two_or_less_crossing() const {
  return ratio(two_or_less_crossing_sentences, valid_sentences, 0.0);
}
double SummaryBlock::tagging_accuracy() const {
  return ratio(total_correct_tags, total_words, 0.0);
}

std::size_t count_matched(const ConstituentSet& gold,
                          const ConstituentSet& sys) {
  using Key = std::tuple<std::string_view, std::size_t, std::size_t>;
  std::map<Key, std::size_t> pool;
  for (const auto& c : gold) ++pool[{c.label, c.start, c.end}];
  std::size_t matched = 0;
  for (const auto& c : sys) {
    auto it = pool.find({c.label, c.start, c.end});
    if (it != pool.end() && it->second > 0) {
      --it->second;
      ++matched;
    }
  }
  return matched;
}

std::size_t count_crossing(const ConstituentSet& gold,
                           const ConstituentSet& sys) {
  return static_cast<std::size_t>(
      std::count_if(sys.begin(), sys.end(), [&](const Constituent& s) {
        return std::any_of(gold.begin(), gold.end(),
                           [&](const Constituent& g) { return crosses(g, s); });
      }));
}

TagResult tag_accuracy(std::span<const TokenLeaf> gold,
                       std::span<const TokenLeaf> sys,
                       std::span<const AlignmentUnit> units) {
  TagResult r;
  r.words = gold.size();
  auto single_overt = [](const std::vector<std::size_t>& items,
                         std::span<const TokenLeaf> leaves) -> const TokenLeaf* {
    const TokenLeaf* found = nullptr;
    for (std::size_t k : items) {
      if (k >= leaves.size()) return nullptr;
      if (leaves[k].tag == kEmptyElementTag) continue;
      if (found) return nullptr;
      found = &leaves[k];
    }
    return found;
  };
  for (const auto& u : units) {
    const TokenLeaf* g = nullptr;
    const TokenLeaf* s = nullptr;
    if (u.one_to_one()) {
      if (u.gold_items.front() < gold.size() && u.sys_items.front() < sys.size()) {
        g = &gold[u.gold_items.front()];
        s = &sys[u.sys_items.front()];
      }
    } else {
      g = single_overt(u.gold_items, gold);
      s = single_overt(u.sys_items, sys);
    }
    if (g && s && g->tag == s->tag) r.correct += u.gold_items.size();
  }
  r.accuracy = ratio(r.correct, r.words, 0.0);
  return r;
}

SentenceScore score_group(std::span<const SyntaxTree> gold_trees,
                          std::span<const SyntaxTree> sys_trees,
                          const SimilarityConfig& config, std::size_t id) {
  const SyntaxTree gold = merge_with_dummy_root(gold_trees);
  const SyntaxTree sys = merge_with_dummy_root(sys_trees);
  const auto gold_leaves = leaves(gold);
  const auto sys_leaves = leaves(sys);
  std::vector<std::string> gold_forms;
  std::vector<std::string> sys_forms;
  for (const auto& l : gold_leaves) gold_forms.push_back(l.form);
  for (const auto& l : sys_leaves) sys_forms.push_back(l.form);

  const auto units = align_words(gold_forms, sys_forms, config);

  auto prepare = [&](const SyntaxTree& tree, Side side,
                     const std::vector<std::string>& forms) {
    ConstituentSet set = remap_to_alignment_units(extract_constituents(tree),
                                                  units, side, forms);
    for (auto& c : set) c.label = base_label(c.label);
    return set;
  };
  const ConstituentSet gold_set = prepare(gold, Side::gold, gold_forms);
  const ConstituentSet sys_set = prepare(sys, Side::system, sys_forms);

  SentenceScore s;
  s.id = id;
  s.length = static_cast<std::size_t>(
      std::count_if(gold_leaves.begin(), gold_leaves.end(),
                    [](const TokenLeaf& l) { return l.tag != kEmptyElementTag; }));
  s.status = Status::ok;
  s.matched = count_matched(gold_set, sys_set);
  s.gold_brackets = gold_set.size();
  s.test_brackets = sys_set.size();
  s.recall = ratio(s.matched, s.gold_brackets, 100.0);
  s.precision = ratio(s.matched, s.test_brackets, 100.0);
  s.crossing = count_crossing(gold_set, sys_set);
  const TagResult tags = tag_accuracy(gold_leaves, sys_leaves, units);
  s.words = tags.words;
  s.correct_tags = tags.correct;
  s.tag_accuracy = tags.accuracy;
  return s;
}

void accumulate(SummaryBlock& block, const SentenceScore& score) {
  ++block.sentences;
  if (score.status == Status::error) {
    ++block.error_sentences;
    return;
  }
  if (score.status == Status::skip) {
    ++block.skip_sentences;
    return;
  }
  ++block.valid_sentences;
  block.total_gold += score.gold_brackets;
  block.total_test += score.test_brackets;
  block.total_matched += score.matched;
  if (score.gold_brackets == score.test_brackets &&
      score.test_brackets == score.matched) {
    ++block.complete_sentences;
  }
  block.total_words += score.words;
  block.total_crossing += score.crossing;
  if (score.crossing == 0) ++block.no_crossing_sentences;
  if (score.crossing <= 2) ++block.two_or_less_crossing_sentences;
  block.total_correct_tags += score.correct_tags;
}

CorpusSummary summarize(std::span<const SentenceScore> scores,
                        int cutoff) {
  CorpusSummary summary;
  summary.cutoff = cutoff;
  for (const auto& s : scores) {
    accumulate(summary.all, s);
    if (static_cast<long long>(s.length) <= cutoff) accumulate(summary.within_cutoff, s);
  }
  return summary;
}

}  // namespace jpevalb
