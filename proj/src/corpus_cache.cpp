#include "refstab/corpus_cache.hpp"

#include <charconv>
#include <fstream>

#include "refstab/errors.hpp"

namespace refstab {

namespace {

constexpr std::string_view kColumns = "record_id\tsource\tyear\ttitle\tcited_refs";

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

// Splits on unescaped " | ". Escaped bars are "\|", so a separator is a bar
// not preceded by an odd run of backslashes.
std::vector<std::string_view> split_refs(std::string_view field) {
  std::vector<std::string_view> out;
  if (field.empty()) return out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < field.size(); ++i) {
    if (field[i] == '\\') {
      ++i;
      continue;
    }
    if (field.substr(i, kCacheRefSeparator.size()) == kCacheRefSeparator) {
      out.push_back(field.substr(start, i - start));
      i += kCacheRefSeparator.size() - 1;
      start = i + 1;
    }
  }
  out.push_back(field.substr(start));
  return out;
}

}  // namespace

std::string escape_cache_field(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '|': out += "\\|"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string unescape_cache_field(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '\\' || i + 1 == text.size()) {
      out.push_back(text[i]);
      continue;
    }
    switch (text[++i]) {
      case 't': out.push_back('\t'); break;
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      default: out.push_back(text[i]);
    }
  }
  return out;
}

void write_corpus_cache(std::ostream& out, const std::vector<BibRecord>& records) {
  out << kCacheMagic << '\n' << kColumns << '\n';
  for (const BibRecord& record : records) {
    out << escape_cache_field(record.record_id) << '\t' << to_string(record.source) << '\t';
    if (record.pub_year) out << *record.pub_year;
    out << '\t' << escape_cache_field(record.title) << '\t';
    for (std::size_t i = 0; i < record.cited_refs.size(); ++i) {
      if (i) out << kCacheRefSeparator;
      out << escape_cache_field(record.cited_refs[i].raw());
    }
    out << '\n';
  }
}

std::vector<BibRecord> read_corpus_cache(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCacheMagic) {
    throw MalformedRecord(1, "not a refstab corpus cache");
  }
  if (!std::getline(in, line) || line != kColumns) {
    throw MalformedRecord(2, "unexpected cache column header");
  }
  std::vector<BibRecord> records;
  std::size_t number = 2;
  while (std::getline(in, line)) {
    ++number;
    auto cells = split_tabs(line);
    if (cells.size() != 5) throw MalformedRecord(number, "expected 5 tab-separated fields");
    BibRecord record;
    record.record_id = unescape_cache_field(cells[0]);
    auto source = source_from_string(cells[1]);
    if (!source) throw MalformedRecord(number, "unknown source '" + std::string(cells[1]) + "'");
    record.source = *source;
    if (!cells[2].empty()) {
      int year = 0;
      auto [ptr, ec] = std::from_chars(cells[2].data(), cells[2].data() + cells[2].size(), year);
      if (ec != std::errc{} || ptr != cells[2].data() + cells[2].size()) {
        throw MalformedRecord(number, "bad year '" + std::string(cells[2]) + "'");
      }
      record.pub_year = year;
    }
    record.title = unescape_cache_field(cells[3]);
    for (std::string_view raw : split_refs(cells[4])) {
      record.add_cited_ref(parse_cited_ref(unescape_cache_field(raw)));
    }
    records.push_back(std::move(record));
  }
  return records;
}

void save_corpus_cache(const std::filesystem::path& path, const std::vector<BibRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write corpus cache " + path.string());
  write_corpus_cache(out, records);
  if (!out) throw Error("failed writing corpus cache " + path.string());
}

std::vector<BibRecord> load_corpus_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open corpus cache " + path.string());
  return read_corpus_cache(in);
}

}  // namespace refstab
