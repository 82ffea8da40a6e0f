#include "refstab/tsv.hpp"

#include <fmt/format.h>

namespace refstab {

namespace {

std::string optional_int(const std::optional<int>& value) {
  return value ? std::to_string(*value) : "";
}

std::vector<std::string> key_cells(const RefKey& key) {
  return {tsv_cell(key.author()), optional_int(key.year()), tsv_cell(key.source().value_or("")),
          optional_int(key.volume()), optional_int(key.first_page()), tsv_cell(key.canonical())};
}

void append(std::vector<std::string>& row, std::vector<std::string> more) {
  for (auto& cell : more) row.push_back(std::move(cell));
}

}  // namespace

std::string tsv_cell(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return out;
}

std::string format_fixed(double value, int decimals) {
  return fmt::format("{:.{}f}", value, decimals);
}

void write_settings_line(std::ostream& out, std::string_view command,
                         const ReportSettings& settings) {
  out << "# refstab " << command;
  for (const auto& [key, value] : settings) out << ' ' << key << '=' << tsv_cell(value);
  out << '\n';
}

void write_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << '\t';
    out << cells[i];
  }
  out << '\n';
}

void write_citation_table(std::ostream& out, int year, const std::vector<RankedEntry>& cited) {
  write_row(out, {"year", "rank", "citations", "author", "ref_year", "source", "volume",
                  "first_page", "reference"});
  for (std::size_t i = 0; i < cited.size(); ++i) {
    std::vector<std::string> row{std::to_string(year), std::to_string(i + 1),
                                 std::to_string(cited[i].count)};
    append(row, key_cells(cited[i].first));
    write_row(out, row);
  }
}

void write_cocitation_table(std::ostream& out, int year, const std::vector<RankedEntry>& pairs) {
  write_row(out, {"year", "rank", "cocitations", "reference_a", "reference_b"});
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const RankedEntry& entry = pairs[i];
    write_row(out, {std::to_string(year), std::to_string(i + 1), std::to_string(entry.count),
                    tsv_cell(entry.first.canonical()),
                    entry.second ? tsv_cell(entry.second->canonical()) : ""});
  }
}

void write_core_set_table(std::ostream& out, const std::vector<CoreRefSet>& cores,
                          const std::vector<CitationCounts>& counts) {
  write_row(out, {"year", "thresholds", "citations", "author", "ref_year", "source", "volume",
                  "first_page", "reference"});
  for (std::size_t i = 0; i < cores.size(); ++i) {
    for (const RefKey& key : cores[i].members) {
      std::string cited;
      if (i < counts.size()) {
        auto it = counts[i].find(key);
        if (it != counts[i].end()) cited = std::to_string(it->second);
      }
      std::vector<std::string> row{std::to_string(cores[i].year), cores[i].thresholds.label(),
                                   cited};
      append(row, key_cells(key));
      write_row(out, row);
    }
  }
}

void write_rsi_series(std::ostream& out, const RsiSeries& series) {
  write_row(out, {"thresholds", "former_year", "later_year", "n_former", "n_later", "shared",
                  "rsi_full", "rsi_2dp"});
  for (const RsiPoint& p : series.points) {
    const auto value = p.value();
    write_row(out, {series.thresholds.label(), std::to_string(p.former_year),
                    std::to_string(p.later_year), std::to_string(p.n_former),
                    std::to_string(p.n_later), std::to_string(p.shared),
                    value ? fmt::format("{}", *value) : "-", format_rsi(p)});
  }
}

void write_rsi_matrix(std::ostream& out, const std::vector<RsiSeries>& series_set) {
  if (series_set.empty()) return;
  const RsiSeries& first = series_set.front();
  const bool interleaved = first.gap == 1;
  std::vector<std::string> header{"thresholds"};
  if (interleaved) {
    for (std::size_t i = 0; i < first.core_sizes.size(); ++i) {
      if (i) header.push_back("sh/RSI");
      header.push_back(std::to_string(first.core_sizes[i].first));
    }
  } else {
    for (const RsiPoint& p : first.points) header.push_back(Interval{p.former_year, p.later_year}.label());
  }
  write_row(out, header);
  for (const RsiSeries& series : series_set) {
    std::vector<std::string> row{series.thresholds.label()};
    if (interleaved) {
      for (std::size_t i = 0; i < series.core_sizes.size(); ++i) {
        if (i) row.push_back(format_rsi_cell(series.points[i - 1]));
        row.push_back(std::to_string(series.core_sizes[i].second));
      }
    } else {
      for (const RsiPoint& p : series.points) row.push_back(format_rsi_cell(p));
    }
    write_row(out, row);
  }
}

void write_groove_report(std::ostream& out, const GrooveReport& report) {
  write_row(out, {"thresholds", "gap", "min_rsi_full", "min_rsi_2dp", "min_intervals"});
  for (const SeriesMinimum& minimum : report.series) {
    std::string intervals;
    for (const Interval& interval : minimum.intervals) {
      if (!intervals.empty()) intervals += ',';
      intervals += interval.label();
    }
    write_row(out, {minimum.thresholds.label(), std::to_string(report.gap),
                    fmt::format("{}", minimum.minimum.value().value_or(0.0)),
                    format_rsi(minimum.minimum), intervals});
  }
  if (report.consensus) {
    std::string intervals;
    for (const Interval& interval : *report.consensus) {
      if (!intervals.empty()) intervals += ',';
      intervals += interval.label();
    }
    write_row(out, {"consensus", std::to_string(report.gap), "", "",
                    intervals.empty() ? "none" : intervals});
  }
}

void write_term_stats(std::ostream& out, const std::vector<TermStats>& terms) {
  write_row(out, {"term", "year", "doc_freq", "percent"});
  for (const TermStats& t : terms) {
    write_row(out, {tsv_cell(t.term), std::to_string(t.year), std::to_string(t.doc_freq),
                    format_fixed(t.percent, 2)});
  }
}

void write_coword_pairs(std::ostream& out, const std::vector<CoWordPair>& pairs) {
  write_row(out, {"term_a", "term_b", "co_doc_freq", "cosine", "percent"});
  for (const CoWordPair& p : pairs) {
    write_row(out, {tsv_cell(p.term_a), tsv_cell(p.term_b), std::to_string(p.co_doc_freq),
                    format_fixed(p.cosine, 4), format_fixed(p.percent, 2)});
  }
}

void write_phrase_trend(std::ostream& out, const std::vector<PhrasePoint>& points) {
  write_row(out, {"year", "records", "doc_freq", "percent"});
  for (const PhrasePoint& p : points) {
    write_row(out, {std::to_string(p.year), std::to_string(p.slice_size),
                    std::to_string(p.doc_freq), format_fixed(p.percent, 2)});
  }
}

void write_phrase_plot(std::ostream& out, const std::vector<PhrasePoint>& points) {
  write_row(out, {"year", "percent"});
  for (const PhrasePoint& p : points) {
    write_row(out, {std::to_string(p.year), format_fixed(p.percent, 2)});
  }
}

}  // namespace refstab
