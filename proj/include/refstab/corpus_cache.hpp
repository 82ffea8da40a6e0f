#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "refstab/records.hpp"

namespace refstab {

/// Line-oriented TSV cache of parsed records.
///
///   #refstab-corpus-cache v1
///   record_id<TAB>source<TAB>year<TAB>title<TAB>cited_refs
///   <one line per record>
///
/// `year` is empty when unknown. `cited_refs` holds the raw reference strings
/// joined by " | ". Backslash, tab, newline, carriage return and '|' are
/// escaped as \\, \t, \n, \r and \| inside every field. Reading a cache and
/// writing it back reproduces the file byte for byte.
inline constexpr std::string_view kCacheMagic = "#refstab-corpus-cache v1";
inline constexpr std::string_view kCacheRefSeparator = " | ";

std::string escape_cache_field(std::string_view text);
std::string unescape_cache_field(std::string_view text);

void write_corpus_cache(std::ostream& out, const std::vector<BibRecord>& records);
/// Throws MalformedRecord on a bad line or missing magic line.
std::vector<BibRecord> read_corpus_cache(std::istream& in);

void save_corpus_cache(const std::filesystem::path& path, const std::vector<BibRecord>& records);
std::vector<BibRecord> load_corpus_cache(const std::filesystem::path& path);

}  // namespace refstab
