#include "refstab/textmetrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <tuple>
#include <unordered_map>

#include "refstab/errors.hpp"

namespace refstab {

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool word_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || u >= 0x80;
}

bool all_digits(const std::string& token) {
  return std::all_of(token.begin(), token.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

bool meets_percent(std::size_t count, std::size_t total, double min_percent) {
  return total > 0 && 100.0 * static_cast<double>(count) >= min_percent * static_cast<double>(total);
}

double percent_of(std::size_t count, std::size_t total) {
  return total == 0 ? 0.0 : 100.0 * static_cast<double>(count) / static_cast<double>(total);
}

// Distinct title words of every record, interned to ids in lexicographic order.
struct TitleIndex {
  std::vector<std::string> terms;
  std::vector<std::vector<int>> records;  // sorted ids per record
  std::vector<std::size_t> doc_freq;

  TitleIndex(const YearSlice& slice, const StopWordList& stop) {
    std::vector<std::set<std::string>> tokenized;
    tokenized.reserve(slice.records.size());
    std::map<std::string, int> ids;
    for (const BibRecord& record : slice.records) {
      tokenized.push_back(tokenize_title(record.title, stop));
      for (const std::string& token : tokenized.back()) ids.try_emplace(token, 0);
    }
    for (auto& [term, id] : ids) {
      id = static_cast<int>(terms.size());
      terms.push_back(term);
    }
    doc_freq.assign(terms.size(), 0);
    for (const auto& tokens : tokenized) {
      std::vector<int> record;
      record.reserve(tokens.size());
      for (const std::string& token : tokens) {
        record.push_back(ids.at(token));
        ++doc_freq[record.back()];
      }
      records.push_back(std::move(record));  // set order == id order
    }
  }

  std::unordered_map<std::uint64_t, std::size_t> pair_counts() const {
    std::unordered_map<std::uint64_t, std::size_t> counts;
    for (const auto& record : records) {
      for (std::size_t i = 0; i < record.size(); ++i) {
        for (std::size_t j = i + 1; j < record.size(); ++j) {
          ++counts[(static_cast<std::uint64_t>(record[i]) << 32) |
                   static_cast<std::uint32_t>(record[j])];
        }
      }
    }
    return counts;
  }
};

bool by_term(const TermStats& a, const TermStats& b) { return a.term < b.term; }

bool by_pair(const CoWordPair& a, const CoWordPair& b) {
  return std::tie(a.term_a, a.term_b) < std::tie(b.term_a, b.term_b);
}

}  // namespace

StopWordList::StopWordList(std::set<std::string> words, std::string source_path)
    : source_path_(std::move(source_path)) {
  for (const std::string& word : words) words_.insert(lower(word));
}

StopWordList StopWordList::read(std::istream& in, std::string source_path) {
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = std::find_if_not(line.begin(), line.end(),
                                  [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    auto last = std::find_if_not(line.rbegin(), line.rend(),
                                 [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (first == line.end()) continue;
    words.emplace(first, last.base());
  }
  return StopWordList(std::move(words), std::move(source_path));
}

StopWordList StopWordList::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open stop-word list " + path.string());
  return read(in, path.string());
}

bool StopWordList::contains(std::string_view word) const {
  return words_.find(lower(word)) != words_.end();
}

std::vector<std::string> title_token_sequence(std::string_view title) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : title) {
    if (word_char(c)) {
      current.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::set<std::string> tokenize_title(std::string_view title, const StopWordList& stop) {
  std::set<std::string> out;
  for (std::string& token : title_token_sequence(title)) {
    if (token.size() < 2 || all_digits(token) || stop.contains(token)) continue;
    out.insert(std::move(token));
  }
  return out;
}

std::vector<TermStats> doc_frequencies(const YearSlice& slice, const StopWordList& stop) {
  TitleIndex index(slice, stop);
  std::vector<TermStats> out;
  out.reserve(index.terms.size());
  for (std::size_t id = 0; id < index.terms.size(); ++id) {
    out.push_back({index.terms[id], slice.year, index.doc_freq[id],
                   percent_of(index.doc_freq[id], slice.size())});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const TermStats& a, const TermStats& b) { return a.doc_freq > b.doc_freq; });
  return out;
}

std::vector<TermStats> new_terms(const YearSlice& former, const YearSlice& later,
                                 const StopWordList& stop, double min_percent) {
  if (min_percent < 0) throw InvalidArgument("min_percent must not be negative");
  TitleIndex earlier(former, stop);
  std::vector<TermStats> out;
  for (TermStats& stats : doc_frequencies(later, stop)) {
    if (!meets_percent(stats.doc_freq, later.size(), min_percent)) continue;
    if (std::binary_search(earlier.terms.begin(), earlier.terms.end(), stats.term)) continue;
    out.push_back(std::move(stats));
  }
  std::sort(out.begin(), out.end(), by_term);
  std::stable_sort(out.begin(), out.end(),
                   [](const TermStats& a, const TermStats& b) { return a.doc_freq > b.doc_freq; });
  return out;
}

std::vector<CoWordPair> cosine_pairs(const YearSlice& slice, const StopWordList& stop,
                                     double min_cosine) {
  if (min_cosine < 0 || min_cosine > 1) throw InvalidArgument("min_cosine must lie in [0, 1]");
  TitleIndex index(slice, stop);
  std::vector<CoWordPair> out;
  for (const auto& [code, co] : index.pair_counts()) {
    const auto a = static_cast<std::size_t>(code >> 32);
    const auto b = static_cast<std::size_t>(code & 0xffffffffu);
    const double cosine =
        static_cast<double>(co) /
        std::sqrt(static_cast<double>(index.doc_freq[a]) * static_cast<double>(index.doc_freq[b]));
    if (cosine < min_cosine) continue;
    out.push_back({index.terms[a], index.terms[b], co, cosine, percent_of(co, slice.size())});
  }
  std::sort(out.begin(), out.end(), [](const CoWordPair& x, const CoWordPair& y) {
    if (x.cosine != y.cosine) return x.cosine > y.cosine;
    return by_pair(x, y);
  });
  return out;
}

std::vector<CoWordPair> new_coword_pairs(const YearSlice& former, const YearSlice& later,
                                         const StopWordList& stop, double min_cosine,
                                         double min_percent) {
  if (min_percent < 0) throw InvalidArgument("min_percent must not be negative");
  std::set<std::pair<std::string, std::string>> earlier;
  TitleIndex index(former, stop);
  for (const auto& [code, co] : index.pair_counts()) {
    earlier.emplace(index.terms[code >> 32], index.terms[code & 0xffffffffu]);
  }
  std::vector<CoWordPair> out;
  for (CoWordPair& pair : cosine_pairs(later, stop, min_cosine)) {
    if (!meets_percent(pair.co_doc_freq, later.size(), min_percent)) continue;
    if (earlier.count({pair.term_a, pair.term_b})) continue;
    out.push_back(std::move(pair));
  }
  std::sort(out.begin(), out.end(), [](const CoWordPair& x, const CoWordPair& y) {
    if (x.co_doc_freq != y.co_doc_freq) return x.co_doc_freq > y.co_doc_freq;
    return by_pair(x, y);
  });
  return out;
}

std::vector<PhrasePoint> phrase_trend(const Corpus& corpus, std::string_view head,
                                      std::string_view stem_prefix, std::optional<Source> source) {
  if (head.empty() || stem_prefix.empty()) {
    throw InvalidArgument("phrase head and stem prefix must not be empty");
  }
  const std::string head_word = lower(head);
  const std::string stem = lower(stem_prefix);
  std::vector<PhrasePoint> out;
  for (const auto& [year, slice] : corpus.slices()) {
    PhrasePoint point{year, 0, 0, 0.0};
    for (const BibRecord& record : slice.records) {
      if (source && record.source != *source) continue;
      ++point.slice_size;
      const auto tokens = title_token_sequence(record.title);
      for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
        if (tokens[i] == head_word && tokens[i + 1].rfind(stem, 0) == 0) {
          ++point.doc_freq;
          break;
        }
      }
    }
    point.percent = percent_of(point.doc_freq, point.slice_size);
    out.push_back(point);
  }
  return out;
}

}  // namespace refstab
