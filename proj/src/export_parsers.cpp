#include "refstab/export_parsers.hpp"

#include <cctype>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "refstab/errors.hpp"

namespace refstab {

std::string_view to_string(Source source) {
  return source == Source::Medline ? "MEDLINE" : "CITATION_INDEX";
}

std::optional<Source> source_from_string(std::string_view text) {
  if (text == "MEDLINE") return Source::Medline;
  if (text == "CITATION_INDEX") return Source::CitationIndex;
  return std::nullopt;
}

bool BibRecord::add_cited_ref(RefKey key) {
  for (const RefKey& existing : cited_refs) {
    if (existing == key) return false;
  }
  cited_refs.push_back(std::move(key));
  return true;
}

std::string ParseIssue::describe() const {
  std::string where = "line " + std::to_string(line) + ": record " + record_id;
  if (kind == Kind::DuplicateId) return where + ": duplicate record id, later record skipped";
  return where + ": missing field " + field;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool blank(std::string_view s) { return trim(s).empty(); }

bool tag_char(char c) { return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9'); }

std::optional<int> leading_year(std::string_view value) {
  value = trim(value);
  if (value.size() < 4) return std::nullopt;
  int year = 0;
  for (int i = 0; i < 4; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(value[i]))) return std::nullopt;
    year = year * 10 + (value[i] - '0');
  }
  return year;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const std::string& line : lines) {
    if (line.empty()) continue;
    if (!out.empty()) out.push_back(' ');
    out += line;
  }
  return out;
}

// Reads lines with CR and a leading BOM removed.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++number_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (number_ == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    return true;
  }
  std::size_t number() const { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

// Fields of one record block: tag -> one entry per occurrence, each a list of
// value lines (tag line first, then continuations).
struct RawBlock {
  std::size_t first_line = 0;
  std::map<std::string, std::vector<std::vector<std::string>>> fields;
  std::vector<std::string>* current = nullptr;

  void open(const std::string& tag, std::string_view value) {
    auto& occurrences = fields[tag];
    occurrences.emplace_back();
    current = &occurrences.back();
    current->emplace_back(trim(value));
  }
  const std::vector<std::string>* first(const std::string& tag) const {
    auto it = fields.find(tag);
    return it == fields.end() || it->second.empty() ? nullptr : &it->second.front();
  }
};

class RecordCollector {
 public:
  explicit RecordCollector(ParseResult& result) : result_(result) {}

  void add(BibRecord record, std::size_t line) {
    if (!ids_.insert(record.record_id).second) {
      result_.report.issues.push_back(
          {ParseIssue::Kind::DuplicateId, line, record.record_id, {}});
      return;
    }
    result_.records.push_back(std::move(record));
  }
  void missing(std::size_t line, const std::string& id, const std::string& field) {
    result_.report.issues.push_back({ParseIssue::Kind::MissingField, line, id, field});
  }
  std::size_t ordinal() { return ++ordinal_; }

 private:
  ParseResult& result_;
  std::set<std::string> ids_;
  std::size_t ordinal_ = 0;
};

void finish_block(const RawBlock& block, Source source, RecordCollector& out) {
  const bool medline = source == Source::Medline;
  const std::string id_tag = medline ? "PMID" : "UT";
  const std::string year_tag = medline ? "DP" : "PY";
  std::size_t ordinal = out.ordinal();

  BibRecord record;
  record.source = source;
  if (const auto* id = block.first(id_tag); id && !join_lines(*id).empty()) {
    record.record_id = join_lines(*id);
  } else {
    record.record_id = (medline ? "MEDLINE:" : "CI:") + std::to_string(ordinal);
    out.missing(block.first_line, record.record_id, id_tag);
  }
  if (const auto* title = block.first("TI"); title && !join_lines(*title).empty()) {
    record.title = join_lines(*title);
  } else {
    out.missing(block.first_line, record.record_id, "TI");
  }
  if (const auto* year = block.first(year_tag)) record.pub_year = leading_year(join_lines(*year));
  if (!record.pub_year) out.missing(block.first_line, record.record_id, year_tag);

  if (!medline) {
    auto it = block.fields.find("CR");
    if (it != block.fields.end()) {
      for (const auto& occurrence : it->second) {
        for (const std::string& line : occurrence) {
          std::string_view rest = line;
          while (!rest.empty()) {
            std::size_t sep = rest.find("; ");
            std::string_view entry = trim(rest.substr(0, sep));
            while (!entry.empty() && entry.back() == ';') entry = trim(entry.substr(0, entry.size() - 1));
            if (!entry.empty()) record.add_cited_ref(parse_cited_ref(entry));
            if (sep == std::string_view::npos) break;
            rest = rest.substr(sep + 2);
          }
        }
      }
    }
  }
  out.add(std::move(record), block.first_line);
}

}  // namespace

ParseResult parse_citation_index_export(std::istream& in) {
  ParseResult result;
  RecordCollector collector(result);
  LineReader reader(in);
  std::optional<RawBlock> block;
  std::string line;

  while (reader.next(line)) {
    if (blank(line)) continue;
    if (line.rfind("   ", 0) == 0) {
      if (!block || !block->current) {
        throw MalformedRecord(reader.number(), "continuation line outside a record");
      }
      block->current->emplace_back(trim(line));
      continue;
    }
    const bool tagged = line.size() >= 2 && tag_char(line[0]) && tag_char(line[1]) &&
                        (line.size() == 2 || line[2] == ' ');
    if (!tagged) throw MalformedRecord(reader.number(), "expected a two-letter field tag");
    const std::string tag = line.substr(0, 2);
    const std::string_view value = line.size() > 3 ? std::string_view(line).substr(3) : "";

    if (!block) {
      if (tag == "FN" || tag == "VR" || tag == "EF") continue;
      if (tag == "ER") throw MalformedRecord(reader.number(), "end-of-record tag outside a record");
      block.emplace();
      block->first_line = reader.number();
    }
    if (tag == "ER") {
      finish_block(*block, Source::CitationIndex, collector);
      block.reset();
      continue;
    }
    if (tag == "EF") {
      throw MalformedRecord(block->first_line, "record not terminated by ER");
    }
    block->open(tag, value);
  }
  if (block) throw MalformedRecord(block->first_line, "record not terminated by ER");
  return result;
}

ParseResult parse_medline_export(std::istream& in) {
  ParseResult result;
  RecordCollector collector(result);
  LineReader reader(in);
  std::optional<RawBlock> block;
  std::string line;

  auto flush = [&] {
    if (block) finish_block(*block, Source::Medline, collector);
    block.reset();
  };

  while (reader.next(line)) {
    if (blank(line)) {
      flush();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(line[0]))) {
      if (!block || !block->current) {
        throw MalformedRecord(reader.number(), "continuation line outside a record");
      }
      block->current->emplace_back(trim(line));
      continue;
    }
    std::size_t tag_end = 0;
    while (tag_end < line.size() && tag_end < 4 && tag_char(line[tag_end])) ++tag_end;
    bool tagged = tag_end > 0 && line.size() >= 5 && line[4] == '-';
    for (std::size_t i = tag_end; tagged && i < 4; ++i) tagged = line[i] == ' ';
    if (!tagged) throw MalformedRecord(reader.number(), "expected a 'TAG - value' field line");
    if (!block) {
      block.emplace();
      block->first_line = reader.number();
    }
    block->open(line.substr(0, tag_end), line.size() > 5 ? std::string_view(line).substr(5) : "");
  }
  flush();
  return result;
}

}  // namespace refstab
