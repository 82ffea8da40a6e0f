#include "refstab/commands.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "refstab/corpus_cache.hpp"
#include "refstab/export_parsers.hpp"
#include "refstab/linkage.hpp"
#include "refstab/stability.hpp"
#include "refstab/textmetrics.hpp"
#include "refstab/tsv.hpp"

namespace refstab {

namespace fs = std::filesystem;

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw CommandError("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::pair<int, int> parse_colon_pair(std::string_view text, std::string_view what) {
  auto parts = split(text, ':');
  if (parts.size() != 2) {
    throw CommandError("bad " + std::string(what) + " '" + std::string(text) + "', expected A:B");
  }
  return {parse_int(parts[0], what), parse_int(parts[1], what)};
}

// Output sources in the order the reports list them.
constexpr Source kSources[] = {Source::Medline, Source::CitationIndex};

std::string source_column(Source source) {
  return source == Source::Medline ? "MEDLINE" : "CITATION_INDEX";
}

std::string file_label(const ThresholdPair& t) {
  return std::to_string(t.cite_min) + "-" + std::to_string(t.cocite_min);
}

std::string years_setting(const Corpus& corpus) {
  return std::to_string(corpus.year_range().min_year) + ":" +
         std::to_string(corpus.year_range().max_year);
}

std::string join_thresholds(const std::vector<ThresholdPair>& thresholds) {
  std::string out;
  for (const auto& t : thresholds) out += (out.empty() ? "" : ",") + t.label();
  return out;
}

class OutputFile {
 public:
  OutputFile(const RunConfig& config, const std::string& name) : path_(config.out_dir / name) {
    std::error_code ec;
    fs::create_directories(config.out_dir, ec);
    out_.open(path_, std::ios::binary);
    if (!out_) throw CommandError("cannot write " + path_.string());
  }
  ~OutputFile() = default;
  std::ostream& stream() { return out_; }
  const fs::path& path() const { return path_; }
  void close() {
    out_.close();
    if (!out_) throw CommandError("failed writing " + path_.string());
  }

 private:
  fs::path path_;
  std::ofstream out_;
};

void require_file(const fs::path& path, std::string_view what) {
  if (!fs::is_regular_file(path)) {
    throw CommandError(std::string(what) + " not found: " + path.string());
  }
}

template <typename Parser>
ParseResult parse_file(const fs::path& path, Parser parser, std::ostream& warn) {
  require_file(path, "input file");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError("cannot open " + path.string());
  ParseResult result;
  try {
    result = parser(in);
  } catch (const MalformedRecord& e) {
    throw CommandError(path.string() + ": " + e.what());
  }
  for (const ParseIssue& issue : result.report.issues) {
    warn << "warning: " << path.string() << ": " << issue.describe() << '\n';
  }
  return result;
}

struct LoadedCorpus {
  Corpus corpus;
  BuildReport report;
};

LoadedCorpus load_corpus(const RunConfig& config) {
  if (!fs::is_regular_file(config.cache)) {
    throw CommandError("corpus cache " + config.cache.string() +
                       " not found; run `refstab ingest` first");
  }
  std::vector<BibRecord> records;
  try {
    records = load_corpus_cache(config.cache);
  } catch (const MalformedRecord& e) {
    throw CommandError(config.cache.string() + ": " + e.what());
  }
  try {
    auto built = build_corpus(records, config.years);
    return {std::move(built.corpus), built.report};
  } catch (const EmptyCorpus& e) {
    throw CommandError(config.cache.string() + ": " + e.what());
  }
}

void write_summary(std::ostream& out, const Corpus& corpus) {
  write_row(out, {"year", "papers_CITATION_INDEX", "papers_MEDLINE", "distinct_cited_refs"});
  std::size_t total_index = 0, total_medline = 0;
  std::set<RefKey> all_refs;
  for (const auto& [year, slice] : corpus.slices()) {
    std::size_t index = 0, medline = 0;
    for (const BibRecord& record : slice.records) {
      (record.source == Source::Medline ? medline : index) += 1;
      all_refs.insert(record.cited_refs.begin(), record.cited_refs.end());
    }
    total_index += index;
    total_medline += medline;
    write_row(out, {std::to_string(year), std::to_string(index), std::to_string(medline),
                    std::to_string(distinct_ref_count(slice))});
  }
  write_row(out, {std::to_string(corpus.year_range().min_year) + " - " +
                      std::to_string(corpus.year_range().max_year),
                  std::to_string(total_index), std::to_string(total_medline),
                  std::to_string(all_refs.size())});
}

void warn_thresholds(const RunConfig& config, std::ostream& warn) {
  if (config.thresholds.empty()) throw CommandError("no threshold pairs given (--thresholds)");
  for (const ThresholdPair& t : config.thresholds) {
    try {
      t.validate();
    } catch (const InvalidArgument& e) {
      throw CommandError(e.what());
    }
    if (auto message = t.warning()) warn << "warning: " << *message << '\n';
  }
}

std::vector<std::pair<int, int>> requested_pairs(const RunConfig& config, const Corpus& corpus) {
  const YearRange range = corpus.year_range();
  std::vector<std::pair<int, int>> pairs = config.year_pairs;
  if (pairs.empty()) {
    for (int gap : config.gaps) {
      for (int year = range.min_year; year + gap <= range.max_year; ++year) pairs.emplace_back(year, year + gap);
    }
  }
  for (const auto& [former, later] : pairs) {
    if (!range.contains(former) || !range.contains(later)) {
      std::string available;
      for (const auto& [year, slice] : corpus.slices()) {
        if (slice.size() == 0) continue;
        available += (available.empty() ? "" : ",") + std::to_string(year);
      }
      throw CommandError("unknown year pair " + std::to_string(former) + ":" +
                         std::to_string(later) + "; available years: " + available);
    }
  }
  return pairs;
}

std::vector<Source> present_sources(const Corpus& corpus) {
  std::vector<Source> out;
  for (Source source : kSources) {
    if (corpus.has_source(source)) out.push_back(source);
  }
  return out;
}

StopWordList load_stopwords(const RunConfig& config) {
  if (!config.stopwords) throw CommandError("--stopwords is required for this command");
  require_file(*config.stopwords, "stop-word list");
  return StopWordList::load(*config.stopwords);
}

ReportSettings text_settings(const RunConfig& config, const Corpus& corpus) {
  return {{"years", years_setting(corpus)},
          {"stopwords", config.stopwords ? config.stopwords->filename().string() : "-"},
          {"min_percent", fmt::format("{}", config.min_percent)},
          {"min_cosine", fmt::format("{}", config.min_cosine)}};
}

}  // namespace

YearRange parse_year_range(std::string_view text) {
  auto [a, b] = parse_colon_pair(text, "year range");
  if (a > b) throw CommandError("year range " + std::string(text) + " is empty");
  return {a, b};
}

std::vector<ThresholdPair> parse_threshold_list(std::string_view text) {
  std::vector<ThresholdPair> out;
  for (std::string_view item : split(text, ',')) {
    try {
      out.push_back(parse_threshold_pair(item));
    } catch (const InvalidArgument& e) {
      throw CommandError(e.what());
    }
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (std::string_view item : split(text, ',')) out.push_back(parse_int(item, "integer"));
  return out;
}

std::vector<std::pair<int, int>> parse_year_pairs(std::string_view text) {
  std::vector<std::pair<int, int>> out;
  for (std::string_view item : split(text, ',')) out.push_back(parse_colon_pair(item, "year pair"));
  return out;
}

void cmd_ingest(const RunConfig& config, std::ostream& log, std::ostream& warn) {
  if (config.index_paths.empty() && config.medline_paths.empty()) {
    throw CommandError("no input files given (--index and/or --medline)");
  }
  for (const auto& path : config.index_paths) require_file(path, "input file");
  for (const auto& path : config.medline_paths) require_file(path, "input file");

  std::vector<BibRecord> index_records, medline_records;
  std::size_t issues = 0;
  for (const auto& path : config.index_paths) {
    auto result = parse_file(path, parse_citation_index_export, warn);
    issues += result.report.issues.size();
    std::move(result.records.begin(), result.records.end(), std::back_inserter(index_records));
  }
  for (const auto& path : config.medline_paths) {
    auto result = parse_file(path, parse_medline_export, warn);
    issues += result.report.issues.size();
    std::move(result.records.begin(), result.records.end(), std::back_inserter(medline_records));
  }

  std::vector<BibRecord> all = index_records;
  all.insert(all.end(), medline_records.begin(), medline_records.end());
  if (config.cache.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(config.cache.parent_path(), ec);
  }
  save_corpus_cache(config.cache, all);

  BuildResult built = [&] {
    try {
      return build_corpus(all, config.years);
    } catch (const EmptyCorpus& e) {
      throw CommandError(e.what());
    }
  }();

  std::optional<LinkageResult> linkage;
  if (!index_records.empty() && !medline_records.empty()) {
    linkage = link_records(medline_records, index_records);
    OutputFile file(config, "linkage.tsv");
    write_settings_line(file.stream(), "ingest", {{"years", years_setting(built.corpus)}});
    write_row(file.stream(), {"medline_id", "status", "index_id", "candidates"});
    for (const LinkEntry& entry : linkage->entries) {
      const char* status = entry.status == LinkStatus::Matched     ? "matched"
                           : entry.status == LinkStatus::Ambiguous ? "ambiguous"
                                                                   : "unmatched";
      write_row(file.stream(), {tsv_cell(entry.medline_id), status,
                                tsv_cell(entry.index_id.value_or("")),
                                std::to_string(entry.candidates)});
    }
    file.close();
  }

  const ReportSettings settings{{"years", years_setting(built.corpus)}};
  {
    OutputFile file(config, "summary.tsv");
    write_settings_line(file.stream(), "ingest", settings);
    write_summary(file.stream(), built.corpus);
    file.close();
  }
  OutputFile report(config, "ingest_report.tsv");
  write_settings_line(report.stream(), "ingest", settings);
  write_row(report.stream(), {"metric", "value"});
  auto metric = [&](const std::string& name, const std::string& value) {
    write_row(report.stream(), {name, value});
  };
  metric("records_CITATION_INDEX", std::to_string(index_records.size()));
  metric("records_MEDLINE", std::to_string(medline_records.size()));
  metric("parse_issues", std::to_string(issues));
  metric("excluded_missing_year", std::to_string(built.report.excluded_missing_year));
  metric("excluded_out_of_range", std::to_string(built.report.excluded_out_of_range));
  metric("corpus_records", std::to_string(built.report.kept_records));
  if (linkage) {
    metric("linkage_matched", std::to_string(linkage->matched));
    metric("linkage_ambiguous", std::to_string(linkage->ambiguous));
    metric("linkage_coverage", format_coverage(*linkage));
  } else {
    metric("linkage_coverage", "not applicable");
  }
  report.close();

  log << "cache: " << config.cache.string() << " (" << all.size() << " records)\n";
  write_summary(log, built.corpus);
  log << "linkage coverage: " << (linkage ? format_coverage(*linkage) : "not applicable") << '\n';
}

void cmd_summary(const RunConfig& config, std::ostream& log, std::ostream&) {
  LoadedCorpus loaded = load_corpus(config);
  OutputFile file(config, "summary.tsv");
  write_settings_line(file.stream(), "summary", {{"years", years_setting(loaded.corpus)}});
  write_summary(file.stream(), loaded.corpus);
  file.close();
  write_summary(log, loaded.corpus);
}

void cmd_rsi(const RunConfig& config, std::ostream& log, std::ostream& warn) {
  warn_thresholds(config, warn);
  if (config.gaps.empty()) throw CommandError("no interval gaps given (--gaps)");
  LoadedCorpus loaded = load_corpus(config);
  const Corpus& corpus = loaded.corpus;
  for (int gap : config.gaps) {
    if (gap < 1 || corpus.year_range().span() <= gap) {
      throw CommandError("GapTooLarge: gap " + std::to_string(gap) +
                         " does not fit the year range " + years_setting(corpus));
    }
  }

  std::vector<std::vector<CoreRefSet>> cores;
  for (const ThresholdPair& t : config.thresholds) {
    cores.push_back(core_sets_by_year(corpus, t, config.workers));
  }

  for (int gap : config.gaps) {
    const ReportSettings settings{{"years", years_setting(corpus)},
                                  {"thresholds", join_thresholds(config.thresholds)},
                                  {"gap", std::to_string(gap)}};
    std::vector<RsiSeries> series_set;
    for (std::size_t i = 0; i < config.thresholds.size(); ++i) {
      series_set.push_back(rsi_series(cores[i], gap));
      OutputFile file(config, "rsi_" + file_label(config.thresholds[i]) + "_gap" +
                                  std::to_string(gap) + ".tsv");
      write_settings_line(file.stream(), "rsi", settings);
      write_rsi_series(file.stream(), series_set.back());
      file.close();
    }

    OutputFile matrix(config, "rsi_matrix_gap" + std::to_string(gap) + ".tsv");
    write_settings_line(matrix.stream(), "rsi", settings);
    write_rsi_matrix(matrix.stream(), series_set);
    matrix.close();
    log << "RSI, gap " << gap << ":\n";
    write_rsi_matrix(log, series_set);

    std::vector<RsiSeries> usable;
    for (const RsiSeries& series : series_set) {
      if (std::any_of(series.points.begin(), series.points.end(),
                      [](const RsiPoint& p) { return p.defined(); })) {
        usable.push_back(series);
      } else {
        warn << "warning: RSI series " << series.thresholds.label() << " gap " << gap
             << " has no defined point and is left out of groove detection\n";
      }
    }
    OutputFile groove(config, "groove_gap" + std::to_string(gap) + ".tsv");
    write_settings_line(groove.stream(), "rsi", settings);
    GrooveReport report = groove_detect(usable);
    report.gap = gap;
    write_groove_report(groove.stream(), report);
    groove.close();
    write_groove_report(log, report);
  }
}

void cmd_core_refs(const RunConfig& config, std::ostream& log, std::ostream& warn) {
  warn_thresholds(config, warn);
  if (config.top_k == 0) throw CommandError("--top must be at least 1");
  LoadedCorpus loaded = load_corpus(config);
  const Corpus& corpus = loaded.corpus;

  std::vector<CitationCounts> counts;
  std::vector<YearSlice> slices;
  for (const auto& [year, slice] : corpus.slices()) {
    slices.push_back(filter_source(slice, Source::CitationIndex));
    counts.push_back(citation_counts(slices.back()));
  }
  std::vector<CoreRefSet> cores;
  std::vector<CitationCounts> core_counts;
  for (const ThresholdPair& t : config.thresholds) {
    auto by_year = core_sets_by_year(corpus, t, config.workers);
    for (std::size_t i = 0; i < by_year.size(); ++i) {
      log << by_year[i].year << '\t' << t.label() << '\t' << by_year[i].members.size() << '\n';
      cores.push_back(std::move(by_year[i]));
      core_counts.push_back(counts[i]);
    }
  }
  const ReportSettings settings{{"years", years_setting(corpus)},
                                {"thresholds", join_thresholds(config.thresholds)},
                                {"top", std::to_string(config.top_k)}};
  OutputFile core_file(config, "core_refs.tsv");
  write_settings_line(core_file.stream(), "core-refs", settings);
  write_core_set_table(core_file.stream(), cores, core_counts);
  core_file.close();

  std::ostringstream cited, cocited;
  bool first = true;
  for (const YearSlice& slice : slices) {
    std::ostringstream c, cc;
    write_citation_table(c, slice.year, top_ranked(slice, config.top_k, RankMode::Cited));
    write_cocitation_table(cc, slice.year, top_ranked(slice, config.top_k, RankMode::Cocited));
    // One header row per file.
    std::string c_text = c.str(), cc_text = cc.str();
    if (!first) {
      c_text.erase(0, c_text.find('\n') + 1);
      cc_text.erase(0, cc_text.find('\n') + 1);
    }
    cited << c_text;
    cocited << cc_text;
    first = false;
  }
  OutputFile top_cited(config, "top_cited.tsv");
  write_settings_line(top_cited.stream(), "core-refs", settings);
  top_cited.stream() << cited.str();
  top_cited.close();
  OutputFile top_cocited(config, "top_cocited.tsv");
  write_settings_line(top_cocited.stream(), "core-refs", settings);
  top_cocited.stream() << cocited.str();
  top_cocited.close();
}

void cmd_words(const RunConfig& config, std::ostream& log, std::ostream&) {
  const StopWordList stop = load_stopwords(config);
  LoadedCorpus loaded = load_corpus(config);
  const Corpus& corpus = loaded.corpus;
  const auto sources = present_sources(corpus);

  for (const auto& [former, later] : requested_pairs(config, corpus)) {
    // term -> per-source stats
    std::map<std::string, std::map<Source, TermStats>> rows;
    for (Source source : sources) {
      auto terms = new_terms(filter_source(corpus.slice(former), source),
                             filter_source(corpus.slice(later), source), stop, config.min_percent);
      for (TermStats& t : terms) rows[t.term].emplace(source, std::move(t));
    }
    std::vector<std::pair<std::string, double>> order;
    for (const auto& [term, by_source] : rows) {
      double best = 0;
      for (const auto& [source, t] : by_source) best = std::max(best, t.percent);
      order.emplace_back(term, best);
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });

    ReportSettings settings = text_settings(config, corpus);
    settings.emplace_back("former", std::to_string(former));
    settings.emplace_back("later", std::to_string(later));
    OutputFile file(config, "new_words_" + std::to_string(former) + "_" + std::to_string(later) + ".tsv");
    write_settings_line(file.stream(), "words", settings);
    std::vector<std::string> header{"term"};
    for (Source source : sources) {
      header.push_back(source_column(source) + "_doc_freq");
      header.push_back(source_column(source) + "_percent");
    }
    write_row(file.stream(), header);
    for (const auto& [term, best] : order) {
      std::vector<std::string> row{tsv_cell(term)};
      for (Source source : sources) {
        auto it = rows[term].find(source);
        row.push_back(it == rows[term].end() ? "-" : std::to_string(it->second.doc_freq));
        row.push_back(it == rows[term].end() ? "-" : format_fixed(it->second.percent, 2));
      }
      write_row(file.stream(), row);
    }
    file.close();
    log << former << " -> " << later << ": " << order.size() << " new words\n";
  }
}

void cmd_cowords(const RunConfig& config, std::ostream& log, std::ostream&) {
  const StopWordList stop = load_stopwords(config);
  LoadedCorpus loaded = load_corpus(config);
  const Corpus& corpus = loaded.corpus;
  const auto sources = present_sources(corpus);

  for (const auto& [former, later] : requested_pairs(config, corpus)) {
    std::map<std::pair<std::string, std::string>, std::map<Source, CoWordPair>> rows;
    for (Source source : sources) {
      auto pairs = new_coword_pairs(filter_source(corpus.slice(former), source),
                                    filter_source(corpus.slice(later), source), stop,
                                    config.min_cosine, config.min_percent);
      for (CoWordPair& p : pairs) rows[{p.term_a, p.term_b}].emplace(source, std::move(p));
    }
    std::vector<std::pair<std::pair<std::string, std::string>, double>> order;
    for (const auto& [key, by_source] : rows) {
      double best = 0;
      for (const auto& [source, p] : by_source) best = std::max(best, p.percent);
      order.emplace_back(key, best);
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });

    ReportSettings settings = text_settings(config, corpus);
    settings.emplace_back("former", std::to_string(former));
    settings.emplace_back("later", std::to_string(later));
    OutputFile file(config, "new_cowords_" + std::to_string(former) + "_" + std::to_string(later) + ".tsv");
    write_settings_line(file.stream(), "cowords", settings);
    std::vector<std::string> header{"pair"};
    for (Source source : sources) {
      header.push_back(source_column(source) + "_co_doc_freq");
      header.push_back(source_column(source) + "_cosine");
      header.push_back(source_column(source) + "_percent");
    }
    write_row(file.stream(), header);
    for (const auto& [key, best] : order) {
      std::vector<std::string> row{tsv_cell(key.first + "/" + key.second)};
      for (Source source : sources) {
        auto& by_source = rows[key];
        auto it = by_source.find(source);
        if (it == by_source.end()) {
          row.insert(row.end(), {"-", "-", "-"});
        } else {
          row.push_back(std::to_string(it->second.co_doc_freq));
          row.push_back(format_fixed(it->second.cosine, 4));
          row.push_back(format_fixed(it->second.percent, 2));
        }
      }
      write_row(file.stream(), row);
    }
    file.close();
    log << former << " -> " << later << ": " << order.size() << " new co-word pairs\n";
  }
}

void cmd_phrase(const RunConfig& config, std::ostream& log, std::ostream&) {
  if (config.head.empty() || config.stem.empty()) {
    throw CommandError("--head and --stem must not be empty");
  }
  LoadedCorpus loaded = load_corpus(config);
  const Corpus& corpus = loaded.corpus;
  const auto sources = present_sources(corpus);
  const ReportSettings settings{{"years", years_setting(corpus)},
                                {"head", config.head},
                                {"stem", config.stem}};
  const std::string base = "phrase_" + config.head + "_" + config.stem;

  std::vector<std::vector<PhrasePoint>> series;
  for (Source source : sources) {
    series.push_back(phrase_trend(corpus, config.head, config.stem, source));
    OutputFile plot(config, base + "_" + source_column(source) + "_plot.tsv");
    write_settings_line(plot.stream(), "phrase", settings);
    write_phrase_plot(plot.stream(), series.back());
    plot.close();
  }

  OutputFile file(config, base + ".tsv");
  write_settings_line(file.stream(), "phrase", settings);
  std::vector<std::string> header{"year"};
  for (Source source : sources) {
    header.push_back(source_column(source) + "_records");
    header.push_back(source_column(source) + "_doc_freq");
    header.push_back(source_column(source) + "_percent");
  }
  write_row(file.stream(), header);
  log << "phrase '" << config.head << " " << config.stem << "*':\n";
  for (std::size_t row = 0; !series.empty() && row < series.front().size(); ++row) {
    std::vector<std::string> cells{std::to_string(series.front()[row].year)};
    for (const auto& s : series) {
      cells.push_back(std::to_string(s[row].slice_size));
      cells.push_back(std::to_string(s[row].doc_freq));
      cells.push_back(format_fixed(s[row].percent, 2));
    }
    write_row(file.stream(), cells);
    write_row(log, cells);
  }
  file.close();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reference stability and title-word analysis of bibliographic exports", "refstab"};
  app.set_config("--config", "", "TOML/INI file with option defaults; flags override it");
  app.require_subcommand(1);

  RunConfig config;
  std::vector<std::string> index_paths, medline_paths;
  std::string stopwords, cache = config.cache.string(), out_dir = config.out_dir.string();
  std::string years, thresholds = "15/11,15/8,11/9,10/8", gaps = "1,2", pairs;

  app.add_option("--index", index_paths, "Citation-index export file(s)");
  app.add_option("--medline", medline_paths, "MEDLINE export file(s)");
  app.add_option("--cache", cache, "Corpus cache file")->capture_default_str();
  app.add_option("--out-dir", out_dir, "Directory for report files")->capture_default_str();
  app.add_option("--years", years, "Publication year range A:B");
  app.add_option("--thresholds", thresholds, "Citation/co-citation threshold pairs")->capture_default_str();
  app.add_option("--gaps", gaps, "Interval gaps in years (1 = consecutive years)")->capture_default_str();
  app.add_option("--min-percent", config.min_percent, "Minimum percent of later-year papers")->capture_default_str();
  app.add_option("--min-cosine", config.min_cosine, "Minimum co-word cosine")->capture_default_str();
  app.add_option("--stopwords", stopwords, "Stop-word list file");
  app.add_option("--pairs", pairs, "Year pairs former:later for words/cowords");
  app.add_option("--head", config.head, "Phrase head word")->capture_default_str();
  app.add_option("--stem", config.stem, "Phrase stem prefix")->capture_default_str();
  app.add_option("--top", config.top_k, "Ranked references per year")->capture_default_str();
  app.add_option("--workers", config.workers, "Worker threads")->capture_default_str();

  using Command = void (*)(const RunConfig&, std::ostream&, std::ostream&);
  const std::vector<std::tuple<std::string, std::string, Command>> commands{
      {"ingest", "Parse exports, write the corpus cache and ingest report", cmd_ingest},
      {"summary", "Papers and distinct cited references per year", cmd_summary},
      {"rsi", "Reference stability index tables and groove report", cmd_rsi},
      {"core-refs", "Core references per year and threshold", cmd_core_refs},
      {"words", "New title words between year pairs", cmd_words},
      {"cowords", "New title co-word pairs between year pairs", cmd_cowords},
      {"phrase", "Per-year frequency of a head word followed by a stem", cmd_phrase},
  };
  Command selected = nullptr;
  for (const auto& [name, help, command] : commands) {
    auto* sub = app.add_subcommand(name, help)->fallthrough();
    sub->callback([&selected, command = command] { selected = command; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    for (const auto& p : index_paths) config.index_paths.emplace_back(p);
    for (const auto& p : medline_paths) config.medline_paths.emplace_back(p);
    if (!stopwords.empty()) config.stopwords = stopwords;
    config.cache = cache;
    config.out_dir = out_dir;
    if (!years.empty()) config.years = parse_year_range(years);
    config.thresholds = parse_threshold_list(thresholds);
    config.gaps = parse_int_list(gaps);
    if (!pairs.empty()) config.year_pairs = parse_year_pairs(pairs);
    if (config.workers == 0) config.workers = 1;
    selected(config, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace refstab
