#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "refstab/citation_graph.hpp"
#include "refstab/corpus.hpp"
#include "refstab/errors.hpp"

namespace refstab {

/// A failure reported to the user with a nonzero exit code.
class CommandError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::vector<std::filesystem::path> index_paths;
  std::vector<std::filesystem::path> medline_paths;
  std::optional<std::filesystem::path> stopwords;
  std::filesystem::path cache = "corpus.cache.tsv";
  std::filesystem::path out_dir = ".";
  std::optional<YearRange> years;
  std::vector<ThresholdPair> thresholds{{15, 11}, {15, 8}, {11, 9}, {10, 8}};
  std::vector<int> gaps{1, 2};
  double min_percent = 1.0;
  double min_cosine = 0.25;
  /// Explicit (former, later) year pairs for words/cowords; empty means every
  /// (y, y + gap) inside the range for each configured gap.
  std::vector<std::pair<int, int>> year_pairs;
  std::string head = "reverse";
  std::string stem = "transcr";
  std::size_t top_k = 20;
  unsigned workers = 1;
};

YearRange parse_year_range(std::string_view text);                 // "1966:1975"
std::vector<ThresholdPair> parse_threshold_list(std::string_view text);  // "15/11,15/8"
std::vector<int> parse_int_list(std::string_view text);            // "1,2"
std::vector<std::pair<int, int>> parse_year_pairs(std::string_view text);  // "1969:1971,1970:1972"

// Each command writes its files under out_dir and a short summary to `log`.
// Warnings go to `warn`. Errors are thrown as CommandError.

void cmd_ingest(const RunConfig& config, std::ostream& log, std::ostream& warn);
void cmd_summary(const RunConfig& config, std::ostream& log, std::ostream& warn);
void cmd_rsi(const RunConfig& config, std::ostream& log, std::ostream& warn);
void cmd_core_refs(const RunConfig& config, std::ostream& log, std::ostream& warn);
void cmd_words(const RunConfig& config, std::ostream& log, std::ostream& warn);
void cmd_cowords(const RunConfig& config, std::ostream& log, std::ostream& warn);
void cmd_phrase(const RunConfig& config, std::ostream& log, std::ostream& warn);

/// Full command-line entry point. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace refstab
