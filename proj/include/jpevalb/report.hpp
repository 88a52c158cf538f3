#pragma once

#include <string>

#include "jpevalb/scoring.hpp"

namespace jpevalb {

/// The three title lines of an evalb report.
std::string format_header();

/// One fixed-width evalb row, newline included.
std::string format_row(const SentenceScore& score);

/// Closing rule, totals line and the two summary blocks.
std::string format_summary(const CorpusSummary& summary);

}  // namespace jpevalb
