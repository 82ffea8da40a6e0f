#pragma once

// Brute-force reference computations used by the tests. They work from raw
// inputs and share no code path with the library internals they check.

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "refstab/corpus.hpp"
#include "refstab/ref_key.hpp"

namespace oracle {

inline refstab::RefKey ref(int i) {
  return refstab::parse_cited_ref("AUTHOR" + std::to_string(i) + " X, " + std::to_string(1950 + i % 20) +
                                  ", J" + std::to_string(i % 7) + ", V" + std::to_string(i) + ", P" +
                                  std::to_string(100 + i));
}

inline refstab::YearSlice slice_from(int year, const std::vector<std::set<int>>& papers) {
  refstab::YearSlice slice{year, {}};
  int n = 0;
  for (const auto& refs : papers) {
    refstab::BibRecord record;
    record.record_id = "P" + std::to_string(++n);
    record.pub_year = year;
    for (int r : refs) record.add_cited_ref(ref(r));
    slice.records.push_back(std::move(record));
  }
  return slice;
}

inline std::vector<std::set<int>> random_papers(std::mt19937& rng, int max_papers, int max_refs) {
  std::uniform_int_distribution<int> papers_dist(0, max_papers);
  std::uniform_int_distribution<int> refs_dist(1, max_refs);
  const int n_papers = papers_dist(rng);
  const int n_refs = refs_dist(rng);
  // Skewed popularity so thresholds above 1 are reachable.
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> weight(static_cast<std::size_t>(n_refs));
  for (auto& w : weight) w = unit(rng) * unit(rng);
  std::vector<std::set<int>> papers(static_cast<std::size_t>(n_papers));
  for (auto& paper : papers) {
    for (int r = 0; r < n_refs; ++r) {
      if (unit(rng) < weight[static_cast<std::size_t>(r)]) paper.insert(r);
    }
  }
  return papers;
}

inline int cites(const std::vector<std::set<int>>& papers, int r) {
  int n = 0;
  for (const auto& p : papers) n += p.count(r) ? 1 : 0;
  return n;
}

inline int cocites(const std::vector<std::set<int>>& papers, int r, int s) {
  int n = 0;
  for (const auto& p : papers) n += (p.count(r) && p.count(s)) ? 1 : 0;
  return n;
}

/// Core references by enumerating every reference pair of every paper.
inline std::set<int> core_refs(const std::vector<std::set<int>>& papers, int cite_min, int cocite_min) {
  std::map<std::pair<int, int>, int> pair_counts;
  std::map<int, int> counts;
  for (const auto& p : papers) {
    for (int r : p) {
      ++counts[r];
      for (int s : p) {
        if (r != s) ++pair_counts[{r, s}];
      }
    }
  }
  std::set<int> out;
  for (const auto& [rs, count] : pair_counts) {
    if (counts[rs.first] >= cite_min && counts[rs.second] >= cite_min && count >= cocite_min) {
      out.insert(rs.first);
    }
  }
  return out;
}

// Independent tokenizer: regex split, lower-case, length/digit/stop filter.
inline std::set<std::string> words(const std::string& title, const std::set<std::string>& stop) {
  std::string lowered;
  for (char c : title) lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  static const std::regex separator("[^a-z0-9]+");
  std::set<std::string> out;
  for (std::sregex_token_iterator it(lowered.begin(), lowered.end(), separator, -1), end; it != end; ++it) {
    std::string w = *it;
    if (w.size() < 2) continue;
    if (std::all_of(w.begin(), w.end(), [](char c) { return c >= '0' && c <= '9'; })) continue;
    if (stop.count(w)) continue;
    out.insert(w);
  }
  return out;
}

inline int df(const std::vector<std::string>& titles, const std::string& w, const std::set<std::string>& stop) {
  int n = 0;
  for (const auto& t : titles) n += words(t, stop).count(w) ? 1 : 0;
  return n;
}

inline int co_df(const std::vector<std::string>& titles, const std::string& a, const std::string& b,
                 const std::set<std::string>& stop) {
  int n = 0;
  for (const auto& t : titles) {
    auto ws = words(t, stop);
    n += (ws.count(a) && ws.count(b)) ? 1 : 0;
  }
  return n;
}

inline std::set<std::string> vocabulary(const std::vector<std::string>& titles, const std::set<std::string>& stop) {
  std::set<std::string> out;
  for (const auto& t : titles) {
    auto ws = words(t, stop);
    out.insert(ws.begin(), ws.end());
  }
  return out;
}

inline refstab::YearSlice titles_slice(int year, const std::vector<std::string>& titles) {
  refstab::YearSlice slice{year, {}};
  int n = 0;
  for (const auto& title : titles) {
    refstab::BibRecord record;
    record.record_id = "T" + std::to_string(year) + "-" + std::to_string(++n);
    record.source = refstab::Source::Medline;
    record.title = title;
    record.pub_year = year;
    slice.records.push_back(std::move(record));
  }
  return slice;
}

inline std::vector<std::string> random_titles(std::mt19937& rng, int max_titles) {
  static const std::vector<std::string> vocab{
      "reverse", "transcriptase", "avian", "virus", "tumor", "of", "in", "the", "RNA", "DNA",
      "mice", "leukemia", "cells", "a", "1970", "sarcoma", "Rous", "polymerase", "x", "type-C"};
  std::uniform_int_distribution<int> count(0, max_titles);
  std::uniform_int_distribution<int> length(0, 7);
  std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
  std::uniform_int_distribution<int> sep(0, 3);
  const char* seps[] = {" ", "-", ", ", ": "};
  std::vector<std::string> titles(static_cast<std::size_t>(count(rng)));
  for (auto& title : titles) {
    int n = length(rng);
    for (int i = 0; i < n; ++i) {
      if (i) title += seps[sep(rng)];
      title += vocab[pick(rng)];
    }
  }
  return titles;
}

}  // namespace oracle
