#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "refstab/citation_graph.hpp"
#include "refstab/stability.hpp"
#include "refstab/textmetrics.hpp"

namespace refstab {

/// key=value settings echoed on the first line of every report.
using ReportSettings = std::vector<std::pair<std::string, std::string>>;

/// "# refstab <command> key=value ..." line.
void write_settings_line(std::ostream& out, std::string_view command,
                         const ReportSettings& settings);
void write_row(std::ostream& out, const std::vector<std::string>& cells);

/// Tabs and newlines inside a cell become spaces.
std::string tsv_cell(std::string_view text);
/// Fixed-point with `decimals` digits.
std::string format_fixed(double value, int decimals);

// Each emitter writes a column header row followed by one row per item.

void write_citation_table(std::ostream& out, int year, const std::vector<RankedEntry>& cited);
void write_cocitation_table(std::ostream& out, int year, const std::vector<RankedEntry>& pairs);
void write_core_set_table(std::ostream& out, const std::vector<CoreRefSet>& cores,
                          const std::vector<CitationCounts>& counts);

void write_rsi_series(std::ostream& out, const RsiSeries& series);
/// Rows = thresholds, columns = years/intervals, cells "sh/RSI". Gap 1
/// interleaves core-set sizes with the interval cells.
void write_rsi_matrix(std::ostream& out, const std::vector<RsiSeries>& series_set);
void write_groove_report(std::ostream& out, const GrooveReport& report);

void write_term_stats(std::ostream& out, const std::vector<TermStats>& terms);
void write_coword_pairs(std::ostream& out, const std::vector<CoWordPair>& pairs);
void write_phrase_trend(std::ostream& out, const std::vector<PhrasePoint>& points);
/// Two columns: year, percent.
void write_phrase_plot(std::ostream& out, const std::vector<PhrasePoint>& points);

}  // namespace refstab
