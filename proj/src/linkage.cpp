#include "refstab/linkage.hpp"

#include <cctype>
#include <map>
#include <utility>

#include <fmt/format.h>

namespace refstab {

std::string normalize_title(std::string_view title) {
  std::string out;
  out.reserve(title.size());
  bool pending_space = false;
  for (char c : title) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u) || u >= 0x80) {
      if (pending_space && !out.empty()) out.push_back(' ');
      pending_space = false;
      out.push_back(static_cast<char>(std::tolower(u)));
    } else {
      pending_space = true;
    }
  }
  return out;
}

LinkageResult link_records(const std::vector<BibRecord>& medline,
                           const std::vector<BibRecord>& index) {
  std::map<std::pair<std::string, int>, std::vector<const BibRecord*>> by_title_year;
  for (const BibRecord& record : index) {
    if (!record.pub_year) continue;
    std::string key = normalize_title(record.title);
    if (key.empty()) continue;
    by_title_year[{std::move(key), *record.pub_year}].push_back(&record);
  }

  LinkageResult result;
  result.entries.reserve(medline.size());
  for (const BibRecord& record : medline) {
    LinkEntry entry;
    entry.medline_id = record.record_id;
    if (record.pub_year) {
      auto it = by_title_year.find({normalize_title(record.title), *record.pub_year});
      if (it != by_title_year.end()) {
        entry.candidates = it->second.size();
        if (entry.candidates == 1) {
          entry.status = LinkStatus::Matched;
          entry.index_id = it->second.front()->record_id;
          ++result.matched;
        } else {
          entry.status = LinkStatus::Ambiguous;
          ++result.ambiguous;
        }
      }
    }
    result.entries.push_back(std::move(entry));
  }
  if (!medline.empty()) {
    result.coverage = static_cast<double>(result.matched) / static_cast<double>(medline.size());
  }
  return result;
}

std::string format_coverage(const LinkageResult& result) {
  if (!result.coverage) return "-";
  return fmt::format("{:.2f}", *result.coverage);
}

}  // namespace refstab
