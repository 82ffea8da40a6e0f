#include "refstab/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "refstab/errors.hpp"

namespace refstab {

YearSlice filter_source(const YearSlice& slice, Source source) {
  YearSlice out{slice.year, {}};
  for (const BibRecord& record : slice.records) {
    if (record.source == source) out.records.push_back(record);
  }
  return out;
}

Corpus::Corpus(std::map<int, YearSlice> slices, YearRange range)
    : slices_(std::move(slices)), range_(range) {
  if (range_.min_year > range_.max_year) throw InvalidArgument("year range is empty");
  for (const auto& [year, slice] : slices_) {
    if (!range_.contains(year) || slice.year != year) {
      throw InvalidArgument("slice " + std::to_string(year) + " lies outside the year range");
    }
  }
  for (int year = range_.min_year; year <= range_.max_year; ++year) {
    slices_.try_emplace(year, YearSlice{year, {}});
  }
}

const YearSlice& Corpus::slice(int year) const {
  auto it = slices_.find(year);
  if (it == slices_.end()) {
    throw InvalidArgument("year " + std::to_string(year) + " is outside the corpus range " +
                          std::to_string(range_.min_year) + ":" + std::to_string(range_.max_year));
  }
  return it->second;
}

std::size_t Corpus::total_records() const {
  return std::accumulate(slices_.begin(), slices_.end(), std::size_t{0},
                         [](std::size_t n, const auto& entry) { return n + entry.second.size(); });
}

bool Corpus::has_source(Source source) const {
  for (const auto& [year, slice] : slices_) {
    if (std::any_of(slice.records.begin(), slice.records.end(),
                    [source](const BibRecord& r) { return r.source == source; })) {
      return true;
    }
  }
  return false;
}

BuildResult build_corpus(const std::vector<BibRecord>& records, std::optional<YearRange> range) {
  BuildReport report;
  report.input_records = records.size();

  std::map<int, YearSlice> slices;
  for (const BibRecord& record : records) {
    if (!record.pub_year) {
      ++report.excluded_missing_year;
      continue;
    }
    const int year = *record.pub_year;
    if (range && !range->contains(year)) {
      ++report.excluded_out_of_range;
      continue;
    }
    auto [it, inserted] = slices.try_emplace(year, YearSlice{year, {}});
    it->second.records.push_back(record);
    ++report.kept_records;
  }
  if (report.kept_records == 0) {
    throw EmptyCorpus("no record falls inside the requested year range");
  }
  YearRange effective = range.value_or(YearRange{slices.begin()->first, slices.rbegin()->first});
  return BuildResult{Corpus(std::move(slices), effective), report};
}

}  // namespace refstab
