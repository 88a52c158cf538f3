#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jpevalb/legacy.hpp"
#include "jpevalb/pipeline.hpp"
#include "support.hpp"

using namespace jpevalb;

namespace {

const char* kBlackMonday =
    "(TOP (S (INTJ (RB No)) (, ,) (NP (PRP it)) (VP (VBD was) (RB n't) "
    "(NP (NNP Black) (NNP Monday))) (. .)))";
const char* kBlackMondayUH =
    "(TOP (S (INTJ (UH No)) (, ,) (NP (PRP it)) (VP (VBD was) (RB n't) "
    "(NP (NNP Black) (NNP Monday))) (. .)))";

using Span = std::tuple<std::string, std::size_t, std::size_t>;

std::vector<Span> spans_of(const ConstituentSet& set) {
  std::vector<Span> out;
  for (const auto& c : set) out.emplace_back(c.label, c.start, c.end);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("parameter file keys") {
  std::vector<std::string> warnings;
  const ParamSet p = parse_prm(
      "# comment\n"
      "LABELED 0\n"
      "DELETE_LABEL TOP\n"
      "DELETE_LABEL ,\n"
      "CUTOFF_LEN 25\n"
      "MAX_ERROR 3\n"
      "EQ_LABEL ADVP PRT\n"
      "EQ_WORD colour color\n"
      "QUOTE_LABEL ``\n"
      "FANCY 1\n",
      &warnings);
  CHECK_FALSE(p.labeled);
  CHECK(p.delete_labels == std::vector<std::string>{"TOP", ","});
  CHECK(p.cutoff_len == 25);
  CHECK(p.max_error == 3);
  CHECK(p.label_equal("ADVP", "PRT"));
  CHECK(p.label_equal("PRT", "ADVP"));
  CHECK_FALSE(p.label_equal("ADVP", "NP"));
  CHECK(p.word_equal("color", "colour"));
  CHECK(p.quote_labels == std::vector<std::string>{"``"});
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("FANCY") != std::string::npos);
}

TEST_CASE("built-in defaults") {
  const ParamSet p = parse_prm("");
  CHECK(p.labeled);
  CHECK(p.cutoff_len == 40);
  CHECK(p.max_error == 10);
  CHECK(p.delete_labels.empty());
}

TEST_CASE("integer keys reject words") {
  try {
    parse_prm("LABELED 1\nCUTOFF_LEN forty\n");
    FAIL("expected PrmError");
  } catch (const PrmError& e) {
    CHECK(e.line() == 2);
    CHECK(e.message().find("CUTOFF_LEN") != std::string::npos);
  }
}

TEST_CASE("equivalence lines need two operands") {
  std::vector<std::string> warnings;
  const ParamSet p = parse_prm("EQ_LABEL ADVP\n", &warnings);
  CHECK(p.eq_labels.empty());
  CHECK(warnings.size() == 1);
}

TEST_CASE("the distributed COLLINS file matches the built-in preset") {
  const ParamSet file = load_prm(testing::fixture("evalb/COLLINS.prm"));
  const ParamSet preset = ParamSet::collins();
  CHECK(file.delete_labels == preset.delete_labels);
  CHECK(file.delete_labels_for_length == preset.delete_labels_for_length);
  CHECK(file.eq_labels == preset.eq_labels);
  CHECK(file.labeled == preset.labeled);
  CHECK(file.cutoff_len == preset.cutoff_len);
  CHECK(file.max_error == preset.max_error);
}

TEST_CASE("missing parameter file") {
  CHECK_THROWS(load_prm(testing::fixture("evalb/nope.prm")));
}

TEST_CASE("punctuation deletion shifts the example sentence") {
  const FilteredTree f = apply_param_filters(testing::tree(kBlackMonday), ParamSet::collins());
  CHECK(f.leaves.size() == 6);
  CHECK(f.length == 8);
  const std::vector<Span> expected = {
      {"INTJ", 0, 1}, {"NP", 1, 2}, {"NP", 4, 6}, {"S", 0, 6}, {"VP", 2, 6}};
  CHECK(spans_of(f.constituents) == expected);
}

TEST_CASE("functional annotations are removed") {
  const FilteredTree f =
      apply_param_filters(testing::tree("(S (NP-SBJ-1 (PRP it)) (VP=2 (VBD was)))"),
                          ParamSet::collins());
  const std::vector<Span> expected = {{"NP", 0, 1}, {"S", 0, 2}, {"VP", 1, 2}};
  CHECK(spans_of(f.constituents) == expected);
}

TEST_CASE("no deletions agree with native counts") {
  testing::TreeGen gen(5);
  ParamSet none;
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = gen.uniform(1, 12);
    const auto l = gen.leaves(n);
    const auto a = gen.build(l, 0, n);
    const auto b = gen.build(l, 0, n);
    const LegacyResult r = legacy_score_pair(a, b, none);
    REQUIRE_FALSE(r.error);
    auto ga = extract_constituents(a);
    auto gb = extract_constituents(b);
    for (auto& c : ga) c.label = base_label(c.label);
    for (auto& c : gb) c.label = base_label(c.label);
    CHECK(r.score.matched == testing::matched_oracle(ga, gb));
    CHECK(r.score.gold_brackets == ga.size());
    CHECK(r.score.test_brackets == gb.size());
    CHECK(r.score.crossing == testing::crossing_oracle(ga, gb));
  }
}

TEST_CASE("adding deletions never adds brackets") {
  testing::TreeGen gen(6);
  ParamSet base;
  ParamSet more;
  more.delete_labels = {"NP", "DT"};
  for (int k = 0; k < 200; ++k) {
    const auto t = gen.random_tree(gen.uniform(1, 12));
    const auto a = apply_param_filters(t, base);
    const auto b = apply_param_filters(t, more);
    CHECK(b.constituents.size() <= a.constituents.size());
    CHECK(b.leaves.size() <= a.leaves.size());
  }
}

TEST_CASE("a sentence of punctuation only") {
  const auto t = testing::tree("(S (, ,) (. .))");
  const LegacyResult r = legacy_score_pair(t, t, ParamSet::collins());
  REQUIRE_FALSE(r.error);
  CHECK(r.score.words == 0);
  CHECK(r.score.gold_brackets == 0);
  CHECK(r.score.test_brackets == 0);
  CHECK(r.score.matched == 0);
}

TEST_CASE("one changed tag under COLLINS settings") {
  const LegacyResult r =
      legacy_score_pair(testing::tree(kBlackMonday), testing::tree(kBlackMondayUH), ParamSet::collins());
  REQUIRE_FALSE(r.error);
  CHECK(r.score.length == 8);
  CHECK(r.score.matched == 5);
  CHECK(r.score.gold_brackets == 5);
  CHECK(r.score.test_brackets == 5);
  CHECK(r.score.words == 6);
  CHECK(r.score.correct_tags == 5);
  CHECK(r.score.tag_accuracy == doctest::Approx(500.0 / 6));
}

TEST_CASE("a dropped trace is an error row unless traces are deleted") {
  const auto gold = testing::tree("(S (NP (-NONE- *-1)) (VP (VBD ran) (ADVP (RB fast))))");
  const auto sys = testing::tree("(S (VP (VBD ran) (ADVP (RB fast))))");

  // COLLINS settings delete -NONE- before the length check.
  const LegacyResult collins = legacy_score_pair(gold, sys, ParamSet::collins());
  CHECK_FALSE(collins.error);
  CHECK(collins.score.status == Status::ok);

  // evalb's built-in settings keep it.
  const LegacyResult r = legacy_score_pair(gold, sys, ParamSet{});
  REQUIRE(r.error);
  CHECK(*r.error == "Length unmatch (3|2)");
  CHECK(r.score.status == Status::error);
  CHECK(r.score.matched == 0);
  CHECK(r.score.gold_brackets == 0);
  CHECK(r.score.test_brackets == 0);
  CHECK(r.score.words == 0);
  CHECK(r.score.recall == 0.0);

  const auto native = evaluate_native(std::vector<SyntaxTree>{gold},
                                      std::vector<SyntaxTree>{sys}, SimilarityConfig{});
  REQUIRE(native.size() == 1);
  CHECK(native[0].status == Status::ok);
  CHECK(native[0].matched == 3);
}

TEST_CASE("a different word is an error row") {
  const LegacyResult r = legacy_score_pair(testing::tree("(S (A a) (B b))"),
                                           testing::tree("(S (A a) (B c))"), ParamSet{});
  REQUIRE(r.error);
  CHECK(*r.error == "Words unmatch (b|c)");
}

TEST_CASE("legacy pairing is positional") {
  const std::vector<SyntaxTree> gold = {testing::tree("(S (A a) (B b))"),
                                        testing::tree("(S (C c) (D d))")};
  const std::vector<SyntaxTree> swapped = {gold[1], gold[0]};
  const LegacyRun legacy = evaluate_legacy(gold, swapped, ParamSet{});
  CHECK(legacy.rows.size() == 2);
  CHECK(legacy.rows[0].status == Status::error);
  CHECK(legacy.rows[1].status == Status::error);
  CHECK(legacy.diagnostics.size() == 2);
  CHECK(legacy.diagnostics[0].rfind("1 : ", 0) == 0);
}

TEST_CASE("MAX_ERROR stops the run") {
  ParamSet p;
  p.max_error = 2;
  std::vector<SyntaxTree> gold, sys;
  for (int k = 0; k < 6; ++k) {
    gold.push_back(testing::tree("(S (A a) (B b))"));
    sys.push_back(testing::tree("(S (A a) (B c))"));
  }
  const LegacyRun run = evaluate_legacy(gold, sys, p);
  CHECK(run.aborted);
  // Errors 1..3 fit the allowance; the fourth aborts before its row.
  CHECK(run.rows.size() == 3);

  p.max_error = 10;
  const LegacyRun fine = evaluate_legacy(gold, sys, p);
  CHECK_FALSE(fine.aborted);
  CHECK(fine.rows.size() == 6);
}

TEST_CASE("evalb line reading") {
  const auto lines = parse_evalb_lines("(S (A a))\n\n(S (A a)) (S (B b))\n");
  REQUIRE(lines.size() == 3);
  CHECK(lines[0].size() == 1);
  CHECK(lines[1].empty());
  CHECK(lines[2].size() == 2);
  CHECK(parse_evalb_lines("").empty());
  CHECK(parse_evalb_lines("(S (A a))").size() == 1);
}

TEST_CASE("blank test lines are skipped") {
  const auto gold = parse_evalb_lines("(S (A a) (B b))\n(S (A a) (B b))\n");
  const auto sys = parse_evalb_lines("(S (A a) (B b))\n\n");
  const LegacyRun run = evaluate_legacy(gold, sys, ParamSet{});
  REQUIRE(run.rows.size() == 2);
  CHECK(run.rows[0].status == Status::ok);
  CHECK(run.rows[1].status == Status::skip);
}
