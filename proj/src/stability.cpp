#include "refstab/stability.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include <fmt/format.h>

#include "refstab/errors.hpp"

namespace refstab {

std::optional<double> RsiPoint::value() const {
  if (!defined()) return std::nullopt;
  return static_cast<double>(shared) / static_cast<double>(union_size());
}

RsiPoint rsi(const CoreRefSet& former, const CoreRefSet& later) {
  if (former.thresholds != later.thresholds) {
    throw ThresholdMismatch("core sets were computed under thresholds " +
                            former.thresholds.label() + " and " + later.thresholds.label());
  }
  RsiPoint point;
  point.former_year = former.year;
  point.later_year = later.year;
  point.n_former = former.members.size();
  point.n_later = later.members.size();
  // Both sets are ordered the same way, so a merge walk counts the overlap.
  auto a = former.members.begin();
  auto b = later.members.begin();
  while (a != former.members.end() && b != later.members.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++point.shared;
      ++a;
      ++b;
    }
  }
  return point;
}

std::string format_rsi(const RsiPoint& point) {
  if (!point.defined()) return "-/-";
  const std::size_t denominator = point.union_size();
  std::size_t hundredths = point.shared * 100 / denominator;
  const std::size_t remainder = point.shared * 100 % denominator;
  if (2 * remainder > denominator || (2 * remainder == denominator && hundredths % 2 == 1)) {
    ++hundredths;
  }
  return fmt::format("{}.{:02}", hundredths / 100, hundredths % 100);
}

std::string format_rsi_cell(const RsiPoint& point) {
  if (!point.defined()) return "-/-";
  return std::to_string(point.shared) + "/" + format_rsi(point);
}

bool rsi_less(const RsiPoint& a, const RsiPoint& b) {
  return a.shared * b.union_size() < b.shared * a.union_size();
}

bool rsi_equal(const RsiPoint& a, const RsiPoint& b) {
  return a.shared * b.union_size() == b.shared * a.union_size();
}

std::vector<CoreRefSet> core_sets_by_year(const Corpus& corpus, const ThresholdPair& thresholds,
                                          unsigned workers) {
  const YearRange range = corpus.year_range();
  std::vector<CoreRefSet> cores(static_cast<std::size_t>(range.span()));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < range.span(); i = next++) {
      const YearSlice slice = filter_source(corpus.slice(range.min_year + i), Source::CitationIndex);
      cores[static_cast<std::size_t>(i)] = core_references(slice, thresholds);
      cores[static_cast<std::size_t>(i)].year = range.min_year + i;
    }
  };
  workers = std::clamp(workers, 1u, static_cast<unsigned>(range.span()));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& thread : pool) thread.join();
  return cores;
}

RsiSeries rsi_series(const std::vector<CoreRefSet>& cores, int gap) {
  if (gap < 1) throw InvalidArgument("interval gap must be at least 1");
  if (cores.empty() || static_cast<int>(cores.size()) <= gap) {
    throw GapTooLarge(gap, "gap " + std::to_string(gap) + " does not fit a range of " +
                               std::to_string(cores.size()) + " year(s)");
  }
  RsiSeries series;
  series.thresholds = cores.front().thresholds;
  series.gap = gap;
  for (const CoreRefSet& core : cores) series.core_sizes.emplace_back(core.year, core.members.size());
  for (std::size_t i = 0; i + static_cast<std::size_t>(gap) < cores.size(); ++i) {
    series.points.push_back(rsi(cores[i], cores[i + static_cast<std::size_t>(gap)]));
  }
  return series;
}

RsiSeries rsi_series(const Corpus& corpus, const ThresholdPair& thresholds, int gap,
                     unsigned workers) {
  if (gap < 1) throw InvalidArgument("interval gap must be at least 1");
  if (corpus.year_range().span() <= gap) {
    throw GapTooLarge(gap, "gap " + std::to_string(gap) + " does not fit the year range " +
                               std::to_string(corpus.year_range().min_year) + ":" +
                               std::to_string(corpus.year_range().max_year));
  }
  return rsi_series(core_sets_by_year(corpus, thresholds, workers), gap);
}

std::string Interval::label() const {
  return std::to_string(former_year) + "/" + std::to_string(later_year);
}

GrooveReport groove_detect(const std::vector<RsiSeries>& series_set) {
  GrooveReport report;
  if (series_set.empty()) return report;
  report.gap = series_set.front().gap;

  auto intervals_of = [](const RsiSeries& series) {
    std::vector<Interval> out;
    for (const RsiPoint& p : series.points) out.push_back({p.former_year, p.later_year});
    return out;
  };
  const std::vector<Interval> coverage = intervals_of(series_set.front());

  for (const RsiSeries& series : series_set) {
    if (series.gap != report.gap || intervals_of(series) != coverage) {
      throw InvalidArgument("groove detection needs series with equal gap and year coverage");
    }
    SeriesMinimum minimum{series.thresholds, {}, {}};
    const RsiPoint* best = nullptr;
    for (const RsiPoint& point : series.points) {
      if (!point.defined()) continue;
      if (!best || rsi_less(point, *best)) {
        best = &point;
        minimum.intervals.clear();
      }
      if (rsi_equal(point, *best)) minimum.intervals.push_back({point.former_year, point.later_year});
    }
    if (!best) {
      throw NoDefinedPoints("RSI series " + series.thresholds.label() + " has no defined point");
    }
    minimum.minimum = *best;
    report.series.push_back(std::move(minimum));
  }

  if (report.series.size() >= 2) {
    std::vector<Interval> common = report.series.front().intervals;
    for (const SeriesMinimum& minimum : report.series) {
      std::vector<Interval> next;
      std::set_intersection(common.begin(), common.end(), minimum.intervals.begin(),
                            minimum.intervals.end(), std::back_inserter(next));
      common = std::move(next);
    }
    report.consensus = std::move(common);
  }
  return report;
}

}  // namespace refstab
