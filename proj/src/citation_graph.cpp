#include "refstab/citation_graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <unordered_map>

#include "refstab/errors.hpp"

namespace refstab {

void ThresholdPair::validate() const {
  if (cite_min < 1 || cocite_min < 1) {
    throw InvalidArgument("thresholds must both be at least 1, got " + label());
  }
}

std::optional<std::string> ThresholdPair::warning() const {
  if (cocite_min <= cite_min) return std::nullopt;
  return "threshold " + label() +
         ": co-citation minimum exceeds citation minimum, the citation minimum never binds";
}

std::string ThresholdPair::label() const {
  return std::to_string(cite_min) + "/" + std::to_string(cocite_min);
}

ThresholdPair parse_threshold_pair(std::string_view text) {
  auto slash = text.find('/');
  auto number = [&](std::string_view part) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
      throw InvalidArgument("bad threshold pair '" + std::string(text) + "', expected e.g. 15/11");
    }
    return value;
  };
  if (slash == std::string_view::npos) {
    throw InvalidArgument("bad threshold pair '" + std::string(text) + "', expected e.g. 15/11");
  }
  ThresholdPair pair{number(text.substr(0, slash)), number(text.substr(slash + 1))};
  pair.validate();
  return pair;
}

RefPair::RefPair(RefKey a, RefKey b) {
  if (a == b) throw InvalidArgument("a co-citation pair needs two distinct references");
  if (b < a) std::swap(a, b);
  first_ = std::move(a);
  second_ = std::move(b);
}

namespace {

// Slice with references interned to dense ids in canonical order.
struct SliceIndex {
  std::vector<RefKey> keys;
  std::vector<std::vector<int>> papers;  // sorted, distinct ids per record
  std::vector<int> cited_by;             // citing-paper count per id

  explicit SliceIndex(const YearSlice& slice) {
    std::map<RefKey, int> ids;
    for (const BibRecord& record : slice.records) {
      for (const RefKey& key : record.cited_refs) ids.try_emplace(key, 0);
    }
    keys.reserve(ids.size());
    for (auto& [key, id] : ids) {
      id = static_cast<int>(keys.size());
      keys.push_back(key);
    }
    cited_by.assign(keys.size(), 0);
    papers.reserve(slice.records.size());
    for (const BibRecord& record : slice.records) {
      std::vector<int> refs;
      refs.reserve(record.cited_refs.size());
      for (const RefKey& key : record.cited_refs) refs.push_back(ids.at(key));
      std::sort(refs.begin(), refs.end());
      refs.erase(std::unique(refs.begin(), refs.end()), refs.end());
      for (int id : refs) ++cited_by[id];
      papers.push_back(std::move(refs));
    }
  }
};

std::uint64_t pair_code(int a, int b) {
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

// Co-citation counts among ids for which `keep` is true; a < b in each key.
std::unordered_map<std::uint64_t, int> count_pairs(const SliceIndex& index,
                                                   const std::vector<char>& keep) {
  std::unordered_map<std::uint64_t, int> counts;
  std::vector<int> kept;
  for (const auto& refs : index.papers) {
    kept.clear();
    for (int id : refs) {
      if (keep[id]) kept.push_back(id);
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
      for (std::size_t j = i + 1; j < kept.size(); ++j) ++counts[pair_code(kept[i], kept[j])];
    }
  }
  return counts;
}

CocitationCounts to_pair_map(const SliceIndex& index,
                             const std::unordered_map<std::uint64_t, int>& counts) {
  CocitationCounts out;
  for (const auto& [code, count] : counts) {
    const auto a = static_cast<int>(code >> 32);
    const auto b = static_cast<int>(code & 0xffffffffu);
    out.emplace(RefPair(index.keys[a], index.keys[b]), count);
  }
  return out;
}

}  // namespace

CitationCounts citation_counts(const YearSlice& slice) {
  SliceIndex index(slice);
  CitationCounts out;
  for (std::size_t id = 0; id < index.keys.size(); ++id) {
    out.emplace_hint(out.end(), index.keys[id], index.cited_by[id]);
  }
  return out;
}

CocitationCounts cocitation_counts(const YearSlice& slice, const std::set<RefKey>& candidates) {
  SliceIndex index(slice);
  std::vector<char> keep(index.keys.size(), 0);
  for (std::size_t id = 0; id < index.keys.size(); ++id) {
    keep[id] = candidates.count(index.keys[id]) ? 1 : 0;
  }
  return to_pair_map(index, count_pairs(index, keep));
}

CoreRefSet core_references(const YearSlice& slice, const ThresholdPair& thresholds) {
  thresholds.validate();
  CoreRefSet core{slice.year, thresholds, {}};
  SliceIndex index(slice);
  std::vector<char> qualifies(index.keys.size(), 0);
  for (std::size_t id = 0; id < index.keys.size(); ++id) {
    qualifies[id] = index.cited_by[id] >= thresholds.cite_min ? 1 : 0;
  }
  std::vector<char> member(index.keys.size(), 0);
  for (const auto& [code, count] : count_pairs(index, qualifies)) {
    if (count < thresholds.cocite_min) continue;
    member[code >> 32] = 1;
    member[code & 0xffffffffu] = 1;
  }
  for (std::size_t id = 0; id < index.keys.size(); ++id) {
    if (member[id]) core.members.insert(core.members.end(), index.keys[id]);
  }
  return core;
}

std::size_t distinct_ref_count(const YearSlice& slice) {
  std::set<RefKey> all;
  for (const BibRecord& record : slice.records) all.insert(record.cited_refs.begin(), record.cited_refs.end());
  return all.size();
}

std::vector<RankedEntry> top_ranked(const YearSlice& slice, std::size_t k, RankMode mode) {
  if (k == 0) throw InvalidArgument("top_ranked needs k >= 1");
  SliceIndex index(slice);
  std::vector<RankedEntry> ranked;
  if (mode == RankMode::Cited) {
    for (std::size_t id = 0; id < index.keys.size(); ++id) {
      ranked.push_back({index.keys[id], std::nullopt, index.cited_by[id]});
    }
  } else {
    std::vector<char> all(index.keys.size(), 1);
    for (const auto& [pair, count] : to_pair_map(index, count_pairs(index, all))) {
      ranked.push_back({pair.first(), pair.second(), count});
    }
  }
  // Input is already in ascending key order; a stable sort on count keeps it for ties.
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const RankedEntry& a, const RankedEntry& b) { return a.count > b.count; });
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

}  // namespace refstab
