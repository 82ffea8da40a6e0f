#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "refstab/corpus.hpp"

namespace refstab {

/// Case-insensitive stop-word set. File format: one word per line, '#' starts
/// a comment, blank lines ignored.
class StopWordList {
 public:
  StopWordList() = default;
  explicit StopWordList(std::set<std::string> words, std::string source_path = {});

  static StopWordList read(std::istream& in, std::string source_path = {});
  static StopWordList load(const std::filesystem::path& path);

  bool contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }
  const std::string& source_path() const { return source_path_; }

 private:
  std::set<std::string, std::less<>> words_;
  std::string source_path_;
};

/// Lowercased maximal runs of letters and digits, in title order. Bytes
/// outside ASCII count as letters so UTF-8 words stay whole.
std::vector<std::string> title_token_sequence(std::string_view title);

/// Distinct title words: tokens of one character or only digits are dropped,
/// stop words removed.
std::set<std::string> tokenize_title(std::string_view title, const StopWordList& stop);

struct TermStats {
  std::string term;
  int year = 0;
  std::size_t doc_freq = 0;
  double percent = 0.0;  // 100 * doc_freq / slice size
};

/// Document frequency of every title word, by doc_freq descending then term.
std::vector<TermStats> doc_frequencies(const YearSlice& slice, const StopWordList& stop);

/// Words of `later` reaching `min_percent` (percent of later's records) that
/// occur in no title of `former`. Sorted by percent descending then term.
std::vector<TermStats> new_terms(const YearSlice& former, const YearSlice& later,
                                 const StopWordList& stop, double min_percent);

struct CoWordPair {
  std::string term_a;  // term_a < term_b
  std::string term_b;
  std::size_t co_doc_freq = 0;
  double cosine = 0.0;
  double percent = 0.0;  // 100 * co_doc_freq / slice size
};

/// Every co-occurring word pair with cosine >= min_cosine, by cosine
/// descending then pair.
std::vector<CoWordPair> cosine_pairs(const YearSlice& slice, const StopWordList& stop,
                                     double min_cosine);

/// Pairs of `later` meeting both thresholds that never co-occur in a title of
/// `former`. Sorted by percent descending then pair.
std::vector<CoWordPair> new_coword_pairs(const YearSlice& former, const YearSlice& later,
                                         const StopWordList& stop, double min_cosine,
                                         double min_percent);

struct PhrasePoint {
  int year = 0;
  std::size_t doc_freq = 0;
  std::size_t slice_size = 0;
  double percent = 0.0;
};

/// Per year of the corpus range, the number of records whose title has `head`
/// immediately followed by a word starting with `stem_prefix`. Adjacency is
/// judged on the unfiltered token sequence. `source` restricts the records.
std::vector<PhrasePoint> phrase_trend(const Corpus& corpus, std::string_view head,
                                      std::string_view stem_prefix,
                                      std::optional<Source> source = std::nullopt);

}  // namespace refstab
