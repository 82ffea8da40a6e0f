#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "refstab/citation_graph.hpp"
#include "refstab/corpus.hpp"

namespace refstab {

/// One comparison of two years' core sets.
struct RsiPoint {
  int former_year = 0;
  int later_year = 0;
  std::size_t n_former = 0;
  std::size_t n_later = 0;
  std::size_t shared = 0;

  /// Both core sets are non-empty.
  bool defined() const { return n_former > 0 && n_later > 0; }
  /// Unique references of both years.
  std::size_t union_size() const { return n_former + n_later - shared; }
  /// shared / union_size at full precision; empty when undefined.
  std::optional<double> value() const;
};

/// Reference stability index of two core sets computed under the same
/// thresholds. Throws ThresholdMismatch otherwise.
RsiPoint rsi(const CoreRefSet& former, const CoreRefSet& later);

/// RSI rounded to two decimals ("0.22"), or "-/-" when undefined. Rounding is
/// exact on the rational value; exact ties go to the even digit.
std::string format_rsi(const RsiPoint& point);
/// "sh/RSI" cell, e.g. "2/0.22"; "-/-" when undefined.
std::string format_rsi_cell(const RsiPoint& point);

/// Strict less-than on the exact rational RSI of two defined points.
bool rsi_less(const RsiPoint& a, const RsiPoint& b);
bool rsi_equal(const RsiPoint& a, const RsiPoint& b);

struct RsiSeries {
  ThresholdPair thresholds;
  int gap = 1;
  /// Core-set size per year of the corpus range, ascending by year.
  std::vector<std::pair<int, std::size_t>> core_sizes;
  std::vector<RsiPoint> points;
};

/// Core sets of every year in the corpus range, computed on `workers` threads.
std::vector<CoreRefSet> core_sets_by_year(const Corpus& corpus, const ThresholdPair& thresholds,
                                          unsigned workers = 1);

/// RSI for every (y, y + gap) inside the corpus range. Throws GapTooLarge
/// when no interval fits and InvalidArgument for gap < 1.
RsiSeries rsi_series(const Corpus& corpus, const ThresholdPair& thresholds, int gap,
                     unsigned workers = 1);
/// Same, from precomputed core sets (ascending, one per year).
RsiSeries rsi_series(const std::vector<CoreRefSet>& cores, int gap);

struct Interval {
  int former_year = 0;
  int later_year = 0;
  std::string label() const;  // "1970/1972"
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

struct SeriesMinimum {
  ThresholdPair thresholds;
  RsiPoint minimum;                  // one representative minimal point
  std::vector<Interval> intervals;   // every interval attaining the minimum
};

struct GrooveReport {
  int gap = 1;
  std::vector<SeriesMinimum> series;
  /// Present only when two or more series were compared: the intervals at
  /// which every series attains its minimum (empty when there is none).
  std::optional<std::vector<Interval>> consensus;

  bool has_consensus() const { return consensus && !consensus->empty(); }
};

/// Per-series minimal defined RSI and the agreement across series. Undefined
/// points are ignored. Throws NoDefinedPoints for a series without defined
/// points and InvalidArgument when series differ in gap or year coverage.
GrooveReport groove_detect(const std::vector<RsiSeries>& series_set);

}  // namespace refstab
