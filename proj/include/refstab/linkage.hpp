#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "refstab/records.hpp"

namespace refstab {

/// Case-folds, replaces punctuation by spaces and collapses whitespace.
std::string normalize_title(std::string_view title);

enum class LinkStatus { Matched, Unmatched, Ambiguous };

struct LinkEntry {
  std::string medline_id;
  LinkStatus status = LinkStatus::Unmatched;
  std::optional<std::string> index_id;  // set iff Matched
  std::size_t candidates = 0;
};

struct LinkageResult {
  /// One entry per MEDLINE record, in input order.
  std::vector<LinkEntry> entries;
  std::size_t matched = 0;
  std::size_t ambiguous = 0;
  /// matched / total MEDLINE records; empty when there are none.
  std::optional<double> coverage;
};

/// Links MEDLINE records to citation-index records with an equal normalized
/// title and an equal publication year. More than one candidate leaves the
/// record unmatched and flagged ambiguous.
LinkageResult link_records(const std::vector<BibRecord>& medline,
                           const std::vector<BibRecord>& index);

/// "0.75" style coverage string, "-" when undefined.
std::string format_coverage(const LinkageResult& result);

}  // namespace refstab
