#include "refstab/ref_key.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <vector>

namespace refstab {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), is_digit);
}

// "V226" -> 226, "P1209" -> 1209. At most nine digits so the value fits.
std::optional<int> prefixed_number(std::string_view segment, char prefix) {
  if (segment.size() < 2 || segment.size() > 10 || segment.front() != prefix) return std::nullopt;
  std::string_view digits = segment.substr(1);
  if (!all_digits(digits)) return std::nullopt;
  int value = 0;
  std::from_chars(digits.data(), digits.data() + digits.size(), value);
  return value;
}

std::optional<int> year_of(std::string_view segment) {
  if (segment.size() != 4 || !all_digits(segment)) return std::nullopt;
  int value = 0;
  std::from_chars(segment.data(), segment.data() + segment.size(), value);
  return value;
}

std::string render(const std::string& author, const std::optional<int>& year,
                   const std::optional<std::string>& source, const std::optional<int>& volume,
                   const std::optional<int>& page) {
  std::string out = author;
  if (year) out += ", " + std::to_string(*year);
  if (source) out += ", " + *source;
  if (volume) out += ", V" + std::to_string(*volume);
  if (page) out += ", P" + std::to_string(*page);
  return out;
}

}  // namespace

std::string normalize_segment(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  return out;
}

RefKey::RefKey(std::string author, std::optional<int> year, std::optional<std::string> source,
               std::optional<int> volume, std::optional<int> first_page, std::string raw)
    : author_(normalize_segment(author)),
      year_(year),
      volume_(volume),
      first_page_(first_page),
      raw_(std::move(raw)) {
  if (source) source_ = normalize_segment(*source);
  canonical_ = render(author_, year_, source_, volume_, first_page_);
}

RefKey parse_cited_ref(std::string_view raw) {
  std::vector<std::string> segments;
  std::size_t start = 0;
  while (start <= raw.size()) {
    std::size_t comma = raw.find(',', start);
    if (comma == std::string_view::npos) comma = raw.size();
    std::string segment = normalize_segment(raw.substr(start, comma - start));
    if (!segment.empty() || segments.empty()) segments.push_back(std::move(segment));
    start = comma + 1;
  }

  std::string author = segments.front();
  std::optional<int> year, volume, page;
  std::optional<std::string> source;
  bool seen_locator = false;  // a V or P segment ends the source window
  for (std::size_t i = 1; i < segments.size(); ++i) {
    const std::string& segment = segments[i];
    if (auto v = prefixed_number(segment, 'V')) {
      if (!volume) volume = v;
      seen_locator = true;
    } else if (auto p = prefixed_number(segment, 'P')) {
      if (!page) page = p;
      seen_locator = true;
    } else if (i == 1 && year_of(segment)) {
      year = year_of(segment);
    } else if (i <= 2 && !source && !seen_locator) {
      source = segment;
    }
  }
  return RefKey(std::move(author), year, std::move(source), volume, page, std::string(raw));
}

std::size_t RefKeyHash::operator()(const RefKey& key) const {
  return std::hash<std::string>{}(key.canonical());
}

}  // namespace refstab
