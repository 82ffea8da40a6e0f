#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "refstab/errors.hpp"
#include "refstab/stability.hpp"

using namespace refstab;

namespace {

// Core sets with the given sizes and overlap, built from synthetic keys.
std::pair<CoreRefSet, CoreRefSet> cores(std::size_t n_former, std::size_t n_later, std::size_t shared,
                                        ThresholdPair t = {15, 8}) {
  CoreRefSet a{1966, t, {}}, b{1967, t, {}};
  for (std::size_t i = 0; i < n_former; ++i) a.members.insert(oracle::ref(static_cast<int>(i)));
  for (std::size_t i = 0; i < n_later; ++i) {
    const int id = i < shared ? static_cast<int>(i) : static_cast<int>(1000 + i);
    b.members.insert(oracle::ref(id));
  }
  return {a, b};
}

RsiPoint rsi_of(std::size_t n_former, std::size_t n_later, std::size_t shared) {
  auto [a, b] = cores(n_former, n_later, shared);
  return rsi(a, b);
}

CoreRefSet core_with(int year, ThresholdPair t, std::initializer_list<int> ids) {
  CoreRefSet core{year, t, {}};
  for (int id : ids) core.members.insert(oracle::ref(id));
  return core;
}

}  // namespace

TEST_CASE("rsi of reference cells") {
  RsiPoint p = rsi_of(8, 3, 2);
  CHECK(p.shared == 2);
  CHECK(p.union_size() == 9);
  CHECK(*p.value() == doctest::Approx(2.0 / 9.0));
  CHECK(format_rsi(p) == "0.22");
  CHECK(format_rsi_cell(p) == "2/0.22");

  CHECK(format_rsi(rsi_of(46, 80, 8)) == "0.07");
  CHECK(*rsi_of(46, 80, 8).value() == doctest::Approx(8.0 / 118.0));
}

TEST_CASE("rsi edge values") {
  CHECK(format_rsi(rsi_of(5, 5, 5)) == "1.00");
  CHECK(format_rsi(rsi_of(5, 4, 0)) == "0.00");
  RsiPoint empty_former = rsi_of(0, 4, 0);
  CHECK_FALSE(empty_former.defined());
  CHECK_FALSE(empty_former.value());
  CHECK(format_rsi(empty_former) == "-/-");
  CHECK(format_rsi_cell(empty_former) == "-/-");
  CHECK(format_rsi_cell(rsi_of(3, 0, 0)) == "-/-");
}

TEST_CASE("two-decimal rounding is exact with ties to even") {
  CHECK(format_rsi(rsi_of(11, 16, 3)) == "0.12");    // 3/24 = 0.125
  CHECK(format_rsi(rsi_of(8, 3, 3)) == "0.38");      // 3/8 = 0.375
  CHECK(format_rsi(rsi_of(100, 101, 1)) == "0.00");  // 1/200 = 0.005
  CHECK(format_rsi(rsi_of(100, 103, 3)) == "0.02");  // 3/200 = 0.015
  CHECK(format_rsi(rsi_of(25, 44, 18)) == "0.35");
  CHECK(format_rsi(rsi_of(29, 72, 6)) == "0.06");
}

TEST_CASE("threshold mismatch is rejected") {
  auto [a, b] = cores(3, 3, 1);
  b.thresholds = {15, 11};
  CHECK_THROWS_AS(rsi(a, b), ThresholdMismatch);
}

TEST_CASE("rsi properties") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> pick(0, 40);
  for (int trial = 0; trial < 500; ++trial) {
    CoreRefSet a{1970, {10, 8}, {}}, b{1972, {10, 8}, {}};
    for (int i = pick(rng); i > 0; --i) a.members.insert(oracle::ref(pick(rng)));
    for (int i = pick(rng); i > 0; --i) b.members.insert(oracle::ref(pick(rng)));
    RsiPoint ab = rsi(a, b), ba = rsi(b, a);
    CHECK(ab.shared == ba.shared);
    CHECK(ab.shared <= std::min(ab.n_former, ab.n_later));
    CHECK(ab.value() == ba.value());
    if (!ab.defined()) continue;
    CHECK(*ab.value() >= 0.0);
    CHECK(*ab.value() <= 1.0);
    CHECK((*ab.value() == 1.0) == (a.members == b.members));
    CHECK((*ab.value() == 0.0) == (ab.shared == 0));
    if (a.members != b.members) {
      const auto extra = oracle::ref(5000 + trial);
      a.members.insert(extra);
      b.members.insert(extra);
      CHECK(rsi_less(ab, rsi(a, b)));
    }
  }
}

TEST_CASE("rsi series over a corpus") {
  std::vector<BibRecord> records;
  for (int year = 1966; year <= 1975; ++year) {
    for (int i = 0; i < 3; ++i) {
      BibRecord r;
      r.record_id = std::to_string(year) + "-" + std::to_string(i);
      r.pub_year = year;
      r.add_cited_ref(oracle::ref(1));
      r.add_cited_ref(oracle::ref(year));
      records.push_back(r);
    }
  }
  Corpus corpus = build_corpus(records).corpus;
  RsiSeries two = rsi_series(corpus, {2, 2}, 2);
  REQUIRE(two.points.size() == 8);
  CHECK(two.points.front().former_year == 1966);
  CHECK(two.points.front().later_year == 1968);
  CHECK(two.points.back().former_year == 1973);
  CHECK(two.points.back().later_year == 1975);
  for (std::size_t i = 1; i < two.points.size(); ++i) {
    CHECK(two.points[i].former_year == two.points[i - 1].former_year + 1);
  }
  CHECK(format_rsi_cell(two.points[0]) == "1/0.33");
  CHECK(rsi_series(corpus, {2, 2}, 1).points.size() == 9);
  CHECK(rsi_series(corpus, {2, 2}, 1, 4).points.size() == 9);
  CHECK_THROWS_AS(rsi_series(corpus, {2, 2}, 10), GapTooLarge);
  CHECK_THROWS_AS(rsi_series(corpus, {2, 2}, 0), InvalidArgument);

  Corpus one_year = build_corpus({records.front()}).corpus;
  CHECK_THROWS_AS(rsi_series(one_year, {1, 1}, 1), GapTooLarge);
}

TEST_CASE("groove detection") {
  const std::vector<ThresholdPair> thresholds{{15, 11}, {15, 8}, {11, 9}, {10, 8}};
  SUBCASE("consensus at a forced dip") {
    std::vector<RsiSeries> set;
    for (const auto& t : thresholds) {
      // Years 0..4; year 2 shares nothing with year 0, everything else overlaps.
      std::vector<CoreRefSet> cs{core_with(1970, t, {1, 2, 3}), core_with(1971, t, {1, 2, 4}),
                                 core_with(1972, t, {7, 8, 9}), core_with(1973, t, {1, 2, 8}),
                                 core_with(1974, t, {1, 7, 8})};
      set.push_back(rsi_series(cs, 2));
    }
    GrooveReport report = groove_detect(set);
    REQUIRE(report.consensus);
    CHECK(report.has_consensus());
    REQUIRE(report.consensus->size() == 1);
    CHECK(report.consensus->front().label() == "1970/1972");
    CHECK(format_rsi(report.series.front().minimum) == "0.00");
  }
  SUBCASE("equal minima are all listed") {
    ThresholdPair t{10, 8};
    std::vector<CoreRefSet> cs{core_with(1970, t, {1, 2}), core_with(1971, t, {1, 3}),
                               core_with(1972, t, {1, 2})};
    RsiSeries series = rsi_series(cs, 1);
    GrooveReport report = groove_detect({series});
    REQUIRE(report.series.size() == 1);
    CHECK(report.series[0].intervals.size() == 2);
    CHECK_FALSE(report.consensus);
  }
  SUBCASE("constant series agree everywhere") {
    std::vector<RsiSeries> set;
    for (const auto& t : {ThresholdPair{10, 8}, ThresholdPair{11, 9}}) {
      std::vector<CoreRefSet> cs{core_with(1970, t, {1}), core_with(1971, t, {1}), core_with(1972, t, {1})};
      set.push_back(rsi_series(cs, 1));
    }
    GrooveReport report = groove_detect(set);
    CHECK(report.consensus->size() == 2);
  }
  SUBCASE("undefined points are skipped, all-undefined series fail") {
    ThresholdPair t{15, 11};
    std::vector<CoreRefSet> cs{core_with(1966, t, {1, 2, 3}), core_with(1967, t, {}),
                               core_with(1968, t, {1, 2}), core_with(1969, t, {1, 2, 5})};
    GrooveReport report = groove_detect({rsi_series(cs, 1)});
    REQUIRE(report.series[0].intervals.size() == 1);
    CHECK(report.series[0].intervals[0].label() == "1968/1969");

    std::vector<CoreRefSet> empty{core_with(1966, t, {}), core_with(1967, t, {})};
    CHECK_THROWS_AS(groove_detect({rsi_series(empty, 1)}), NoDefinedPoints);
  }
  SUBCASE("series must share gap and coverage") {
    ThresholdPair t{10, 8};
    std::vector<CoreRefSet> cs{core_with(1970, t, {1}), core_with(1971, t, {1}), core_with(1972, t, {1})};
    CHECK_THROWS_AS(groove_detect({rsi_series(cs, 1), rsi_series(cs, 2)}), InvalidArgument);
  }
}
