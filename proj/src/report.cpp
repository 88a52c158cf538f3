#include "jpevalb/report.hpp"

#include <algorithm>
#include <cstdio>

namespace jpevalb {

namespace {

constexpr const char* kRule =
    "============================================================================\n";

template <class... Args>
void appendf(std::string& out, const char* format, Args... args) {
  char buf[256];
  const int n = std::snprintf(buf, sizeof buf, format, args...);
  if (n > 0) out.append(buf, std::min(static_cast<std::size_t>(n), sizeof buf - 1));
}

void append_block(std::string& out, const SummaryBlock& b) {
  appendf(out, "Number of sentence        = %6zu\n", b.sentences);
  appendf(out, "Number of Error sentence  = %6zu\n", b.error_sentences);
  appendf(out, "Number of Skip  sentence  = %6zu\n", b.skip_sentences);
  appendf(out, "Number of Valid sentence  = %6zu\n", b.valid_sentences);
  appendf(out, "Bracketing Recall         = %6.2f\n", b.recall());
  appendf(out, "Bracketing Precision      = %6.2f\n", b.precision());
  appendf(out, "Bracketing FMeasure       = %6.2f\n", b.f1());
  appendf(out, "Complete match            = %6.2f\n", b.complete_match());
  appendf(out, "Average crossing          = %6.2f\n", b.average_crossing());
  appendf(out, "No crossing               = %6.2f\n", b.no_crossing());
  appendf(out, "2 or less crossing        = %6.2f\n", b.two_or_less_crossing());
  appendf(out, "Tagging accuracy          = %6.2f\n", b.tagging_accuracy());
}

}  // namespace

std::string format_header() {
  std::string out;
  out += "  Sent.                        Matched  Bracket   Cross        Correct Tag\n";
  out += " ID  Len.  Stat. Recal  Prec.  Bracket gold test Bracket Words  Tags Accracy\n";
  out += kRule;
  return out;
}

std::string format_row(const SentenceScore& s) {
  std::string out;
  appendf(out, "%4zu  %3zu    %d  ", s.id, s.length, static_cast<int>(s.status));
  appendf(out, "%6.2f %6.2f   %3zu    %3zu  %3zu    %3zu", s.recall, s.precision,
          s.matched, s.gold_brackets, s.test_brackets, s.crossing);
  appendf(out, "   %4zu  %4zu   %6.2f\n", s.words, s.correct_tags, s.tag_accuracy);
  return out;
}

std::string format_summary(const CorpusSummary& summary) {
  const SummaryBlock& all = summary.all;
  std::string out = kRule;
  if (all.total_gold > 0 && all.total_test > 0) {
    appendf(out, "                %6.2f %6.2f %6zu %5zu %5zu  %5zu", all.recall(),
            all.precision(), all.total_matched, all.total_gold, all.total_test,
            all.total_crossing);
  }
  appendf(out, "  %5zu %5zu   %6.2f", all.total_words, all.total_correct_tags,
          all.tagging_accuracy());
  out += "\n=== Summary ===\n\n-- All --\n";
  append_block(out, all);
  appendf(out, "\n-- len<=%d --\n", summary.cutoff);
  append_block(out, summary.within_cutoff);
  return out;
}

}  // namespace jpevalb
