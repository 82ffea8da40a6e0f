#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "refstab/corpus.hpp"
#include "refstab/ref_key.hpp"

namespace refstab {

/// Minimum citing-paper count and minimum co-citation count, written "15/11".
struct ThresholdPair {
  int cite_min = 1;
  int cocite_min = 1;

  /// Throws InvalidArgument unless both are at least 1.
  void validate() const;
  /// Set when cocite_min > cite_min: such a pair can never be satisfied.
  std::optional<std::string> warning() const;
  std::string label() const;  // "15/11"

  friend auto operator<=>(const ThresholdPair&, const ThresholdPair&) = default;
};

/// Parses "15/11".
ThresholdPair parse_threshold_pair(std::string_view text);

/// Unordered pair of distinct references, stored with first < second.
class RefPair {
 public:
  RefPair(RefKey a, RefKey b);
  const RefKey& first() const { return first_; }
  const RefKey& second() const { return second_; }
  friend auto operator<=>(const RefPair&, const RefPair&) = default;
  friend bool operator==(const RefPair&, const RefPair&) = default;

 private:
  RefKey first_;
  RefKey second_;
};

using CitationCounts = std::map<RefKey, int>;
using CocitationCounts = std::map<RefPair, int>;

/// Number of papers in the slice citing each reference.
CitationCounts citation_counts(const YearSlice& slice);

/// Number of papers citing both members, for every pair of candidates that is
/// co-cited at least once.
CocitationCounts cocitation_counts(const YearSlice& slice, const std::set<RefKey>& candidates);

struct CoreRefSet {
  int year = 0;
  ThresholdPair thresholds;
  std::set<RefKey> members;
};

/// References cited at least cite_min times that are co-cited at least
/// cocite_min times with another reference that is itself cited at least
/// cite_min times.
CoreRefSet core_references(const YearSlice& slice, const ThresholdPair& thresholds);

/// Size of the union of cited references over the slice.
std::size_t distinct_ref_count(const YearSlice& slice);

enum class RankMode { Cited, Cocited };

struct RankedEntry {
  RefKey first;
  std::optional<RefKey> second;  // set in Cocited mode
  int count = 0;
};

/// Top `k` references (or pairs) by count, ties by ascending canonical key.
std::vector<RankedEntry> top_ranked(const YearSlice& slice, std::size_t k, RankMode mode);

}  // namespace refstab
