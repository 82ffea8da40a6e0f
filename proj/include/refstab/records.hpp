#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "refstab/ref_key.hpp"

namespace refstab {

enum class Source { CitationIndex, Medline };

/// "CITATION_INDEX" or "MEDLINE".
std::string_view to_string(Source source);
std::optional<Source> source_from_string(std::string_view text);

/// One bibliographic record from either export format.
struct BibRecord {
  std::string record_id;
  Source source = Source::CitationIndex;
  std::string title;
  std::optional<int> pub_year;
  /// Distinct cited references in first-seen order. Always empty for MEDLINE.
  std::vector<RefKey> cited_refs;

  /// Adds `key` unless an equal key is already present. Returns true if added.
  bool add_cited_ref(RefKey key);

  friend bool operator==(const BibRecord&, const BibRecord&) = default;
};

struct ParseIssue {
  enum class Kind { MissingField, DuplicateId };
  Kind kind = Kind::MissingField;
  std::size_t line = 0;  // first line of the offending record
  std::string record_id;
  std::string field;

  std::string describe() const;
};

struct ParseReport {
  std::vector<ParseIssue> issues;
  bool empty() const { return issues.empty(); }
};

struct ParseResult {
  std::vector<BibRecord> records;
  ParseReport report;
};

}  // namespace refstab
