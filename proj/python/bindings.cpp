#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "jpevalb/alignment.hpp"
#include "jpevalb/constituents.hpp"
#include "jpevalb/legacy.hpp"
#include "jpevalb/pipeline.hpp"
#include "jpevalb/report.hpp"
#include "jpevalb/scoring.hpp"
#include "jpevalb/tree.hpp"

namespace py = pybind11;
using namespace jpevalb;

namespace {

std::vector<SyntaxTree> parse_one_or_more(const std::string& text) {
  auto trees = parse_bracketed(text);
  if (trees.empty()) throw std::invalid_argument("no tree in input");
  return trees;
}

SimilarityConfig make_config(double threshold,
                             const std::vector<std::pair<std::string, std::string>>& exceptions) {
  SimilarityConfig c;
  c.ratio_threshold = threshold;
  for (const auto& [a, b] : exceptions) c.exceptions.add(a, b);
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Alignment-based PARSEVAL evaluation";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PrmError>(m, "PrmError", PyExc_ValueError);
  py::register_exception<ExceptionListError>(m, "ExceptionListError",
                                             PyExc_ValueError);

  py::class_<SyntaxTree>(m, "SyntaxTree")
      .def_readonly("label", &SyntaxTree::label)
      .def_readonly("children", &SyntaxTree::children)
      .def_readonly("word", &SyntaxTree::word)
      .def("is_preterminal", &SyntaxTree::is_preterminal)
      .def("__eq__", [](const SyntaxTree& a, const SyntaxTree& b) { return a == b; })
      .def("__repr__", [](const SyntaxTree& t) { return render_bracketed(t); });

  py::class_<TokenLeaf>(m, "TokenLeaf")
      .def_readonly("form", &TokenLeaf::form)
      .def_readonly("tag", &TokenLeaf::tag)
      .def_readonly("index", &TokenLeaf::index);

  m.def("parse_bracketed", &parse_bracketed, py::arg("text"));
  m.def("render_bracketed", &render_bracketed, py::arg("tree"));
  m.def("leaves", &leaves, py::arg("tree"));

  m.def("normalize_nospace", &normalize_nospace, py::arg("text"));
  m.def("edit_distance", &edit_distance, py::arg("a"), py::arg("b"));
  m.def(
      "similar",
      [](const std::string& a, const std::string& b, double threshold) {
        SimilarityConfig c;
        c.ratio_threshold = threshold;
        return similar(a, b, c);
      },
      py::arg("a"), py::arg("b"), py::arg("ratio_threshold") = 0.1);

  auto units_to_py = [](const std::vector<AlignmentUnit>& units) {
    py::list out;
    for (const auto& u : units) out.append(py::make_tuple(u.gold_items, u.sys_items));
    return out;
  };
  m.def(
      "align_words",
      [units_to_py](const std::vector<std::string>& gold,
                    const std::vector<std::string>& sys, double threshold,
                    const std::vector<std::pair<std::string, std::string>>& exceptions) {
        return units_to_py(align_words(gold, sys, make_config(threshold, exceptions)));
      },
      py::arg("gold"), py::arg("system"), py::arg("ratio_threshold") = 0.1,
      py::arg("exceptions") = std::vector<std::pair<std::string, std::string>>{},
      "List of (gold indices, system indices) pairs.");
  m.def(
      "align_sentences",
      [units_to_py](const std::vector<std::vector<std::string>>& gold,
                    const std::vector<std::vector<std::string>>& sys, double threshold) {
        return units_to_py(align_sentences(gold, sys, make_config(threshold, {})));
      },
      py::arg("gold"), py::arg("system"), py::arg("ratio_threshold") = 0.1);

  m.def(
      "extract_constituents",
      [](const std::string& text) {
        py::list out;
        for (const auto& c : extract_constituents(merge_with_dummy_root(parse_one_or_more(text)))) {
          out.append(py::make_tuple(c.label, c.start, c.end, c.tokens));
        }
        return out;
      },
      py::arg("text"),
      "(label, start, end, tokens) for the trees in text, merged under a dummy "
      "root when there are several.");

  py::enum_<Status>(m, "Status")
      .value("OK", Status::ok)
      .value("SKIP", Status::skip)
      .value("ERROR", Status::error);

  py::class_<SentenceScore>(m, "SentenceScore")
      .def_readonly("id", &SentenceScore::id)
      .def_readonly("length", &SentenceScore::length)
      .def_readonly("status", &SentenceScore::status)
      .def_readonly("recall", &SentenceScore::recall)
      .def_readonly("precision", &SentenceScore::precision)
      .def_readonly("matched", &SentenceScore::matched)
      .def_readonly("gold_brackets", &SentenceScore::gold_brackets)
      .def_readonly("test_brackets", &SentenceScore::test_brackets)
      .def_readonly("crossing", &SentenceScore::crossing)
      .def_readonly("words", &SentenceScore::words)
      .def_readonly("correct_tags", &SentenceScore::correct_tags)
      .def_readonly("tag_accuracy", &SentenceScore::tag_accuracy)
      .def("__repr__", [](const SentenceScore& s) { return format_row(s); });

  m.def(
      "score_group",
      [](const std::string& gold, const std::string& sys, double threshold) {
        return score_group(parse_one_or_more(gold), parse_one_or_more(sys),
                           make_config(threshold, {}));
      },
      py::arg("gold"), py::arg("system"), py::arg("ratio_threshold") = 0.1,
      "Scores one aligned group given as bracketed text.");

  m.def(
      "evaluate",
      [](const std::string& gold, const std::string& sys) {
        const auto g = parse_bracketed(gold);
        const auto s = parse_bracketed(sys);
        return evaluate_native(g, s, SimilarityConfig{});
      },
      py::arg("gold"), py::arg("system"));

  py::class_<ParamSet>(m, "ParamSet")
      .def_static("collins", &ParamSet::collins)
      .def_readonly("delete_labels", &ParamSet::delete_labels)
      .def_readonly("delete_labels_for_length", &ParamSet::delete_labels_for_length)
      .def_readonly("eq_labels", &ParamSet::eq_labels)
      .def_readonly("eq_words", &ParamSet::eq_words)
      .def_readonly("labeled", &ParamSet::labeled)
      .def_readonly("cutoff_len", &ParamSet::cutoff_len)
      .def_readonly("max_error", &ParamSet::max_error);

  m.def("parse_prm", [](const std::string& text) { return parse_prm(text); },
        py::arg("text"));
  m.def(
      "legacy_score_pair",
      [](const std::string& gold, const std::string& sys,
         std::optional<ParamSet> params) {
        const auto p = params.value_or(ParamSet::collins());
        return legacy_score_lines(parse_bracketed(gold), parse_bracketed(sys), p).score;
      },
      py::arg("gold"), py::arg("system"), py::arg("params") = py::none());

  m.def("format_row", &format_row, py::arg("score"));

  m.def(
      "run",
      [](const std::filesystem::path& gold, const std::filesystem::path& sys,
         bool legacy, std::optional<std::filesystem::path> prm,
         std::optional<std::filesystem::path> exceptions) {
        RunConfig config{gold, sys, legacy, prm, exceptions};
        std::ostringstream out;
        std::ostringstream err;
        const int code = run(config, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("gold_path"), py::arg("system_path"), py::arg("legacy") = false,
      py::arg("prm_path") = py::none(), py::arg("exceptions_path") = py::none(),
      "Returns (exit code, report, diagnostics).");
}
