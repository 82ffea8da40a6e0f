#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace refstab {

/// Normalized identity of one cited-reference string such as
/// "BALTIMORE D, 1970, NATURE, V226, P1209".
///
/// Equality compares the component tuple (author, year, source, volume,
/// first page); `raw` is carried along for reporting only. Ordering follows
/// the canonical rendering of that tuple, which is injective, so ordering
/// and equality agree.
class RefKey {
 public:
  RefKey() = default;
  RefKey(std::string author, std::optional<int> year, std::optional<std::string> source,
         std::optional<int> volume, std::optional<int> first_page, std::string raw = {});

  const std::string& author() const { return author_; }
  const std::optional<int>& year() const { return year_; }
  const std::optional<std::string>& source() const { return source_; }
  const std::optional<int>& volume() const { return volume_; }
  const std::optional<int>& first_page() const { return first_page_; }
  const std::string& raw() const { return raw_; }

  /// Canonical string of the normalized components, e.g.
  /// "BALTIMORE D, 1970, NATURE, V226, P1209". Parsing it yields an equal key.
  const std::string& canonical() const { return canonical_; }

  friend bool operator==(const RefKey& a, const RefKey& b) {
    return a.author_ == b.author_ && a.year_ == b.year_ && a.source_ == b.source_ &&
           a.volume_ == b.volume_ && a.first_page_ == b.first_page_;
  }
  friend std::strong_ordering operator<=>(const RefKey& a, const RefKey& b) {
    return a.canonical_ <=> b.canonical_;
  }

 private:
  std::string author_;
  std::optional<int> year_;
  std::optional<std::string> source_;
  std::optional<int> volume_;
  std::optional<int> first_page_;
  std::string raw_;
  std::string canonical_;
};

/// Uppercases and collapses runs of whitespace to one space, trimming both ends.
std::string normalize_segment(std::string_view text);

/// Parses one cited-reference string. Never fails: comma-separated segments are
/// mapped positionally (author, year, source), "V<digits>" is the volume and
/// "P<digits>" the first page; anything else survives only in raw().
RefKey parse_cited_ref(std::string_view raw);

struct RefKeyHash {
  std::size_t operator()(const RefKey& key) const;
};

}  // namespace refstab
