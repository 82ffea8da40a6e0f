#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "refstab/records.hpp"

namespace refstab {

struct YearRange {
  int min_year = 0;
  int max_year = 0;

  bool contains(int year) const { return year >= min_year && year <= max_year; }
  int span() const { return max_year - min_year + 1; }
  friend bool operator==(const YearRange&, const YearRange&) = default;
};

struct YearSlice {
  int year = 0;
  std::vector<BibRecord> records;

  std::size_t size() const { return records.size(); }
};

/// Records with the given source only.
YearSlice filter_source(const YearSlice& slice, Source source);

struct BuildReport {
  std::size_t input_records = 0;
  std::size_t kept_records = 0;
  std::size_t excluded_out_of_range = 0;
  std::size_t excluded_missing_year = 0;
};

/// Records partitioned by publication year. Immutable once built.
class Corpus {
 public:
  /// Missing years inside `range` get empty slices.
  Corpus(std::map<int, YearSlice> slices, YearRange range);

  const YearRange& year_range() const { return range_; }
  /// One slice per year of the range, empty slices included.
  const std::map<int, YearSlice>& slices() const { return slices_; }
  /// Throws InvalidArgument for a year outside the range.
  const YearSlice& slice(int year) const;
  std::size_t total_records() const;
  bool has_source(Source source) const;

 private:
  std::map<int, YearSlice> slices_;
  YearRange range_;
};

struct BuildResult {
  Corpus corpus;
  BuildReport report;
};

/// Partitions `records` by year. Records without a year, or outside `range`
/// when one is given, are excluded and counted. When `range` is absent it
/// spans the surviving records. Throws EmptyCorpus if nothing survives.
BuildResult build_corpus(const std::vector<BibRecord>& records,
                         std::optional<YearRange> range = std::nullopt);

}  // namespace refstab
