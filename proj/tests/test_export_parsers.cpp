#include <doctest.h>

#include <fstream>
#include <sstream>

#include "refstab/errors.hpp"
#include "refstab/export_parsers.hpp"

using namespace refstab;

namespace {

ParseResult parse_index_file(const std::string& name) {
  std::ifstream in(std::string(REFSTAB_FIXTURES) + "/" + name);
  REQUIRE(in);
  return parse_citation_index_export(in);
}

ParseResult parse_index_text(const std::string& text) {
  std::istringstream in(text);
  return parse_citation_index_export(in);
}

ParseResult parse_medline_text(const std::string& text) {
  std::istringstream in(text);
  return parse_medline_export(in);
}

}  // namespace

TEST_CASE("citation-index fixture yields three records") {
  ParseResult result = parse_index_file("citation_index_3.txt");
  REQUIRE(result.records.size() == 3);
  CHECK(result.report.empty());
  CHECK(result.records[0].cited_refs.size() == 2);
  CHECK(result.records[1].cited_refs.size() == 0);
  CHECK(result.records[2].cited_refs.size() == 5);

  const BibRecord& first = result.records[0];
  CHECK(first.record_id == "WOS:A1970G001");
  CHECK(first.source == Source::CitationIndex);
  CHECK(first.title == "RNA-DEPENDENT DNA POLYMERASE IN VIRIONS OF RNA TUMOUR VIRUSES");
  CHECK(first.pub_year == 1970);
  CHECK(result.records[2].cited_refs.front().canonical() == "BALTIMORE D, 1970, NATURE, V226, P1209");
}

TEST_CASE("citation-index edge cases") {
  CHECK(parse_index_text("").records.empty());
  CHECK(parse_index_text("").report.empty());

  auto dup = parse_index_text(
      "PT J\nTI X\nPY 1970\nCR A B, 1960, J, V1, P1\n   A B, 1960, J, V1, P1\nUT U1\nER\n");
  REQUIRE(dup.records.size() == 1);
  CHECK(dup.records[0].cited_refs.size() == 1);

  auto crlf = parse_index_text("PT J\r\nTI Title\r\n   continued\r\nPY 1971\r\nUT U2\r\nER\r\n");
  REQUIRE(crlf.records.size() == 1);
  CHECK(crlf.records[0].title == "Title continued");
}

TEST_CASE("citation-index missing fields are reported, not dropped") {
  auto result = parse_index_text("PT J\nSO NATURE\nER\nPT J\nTI Y\nPY 1970\nUT U\nER\n");
  REQUIRE(result.records.size() == 2);
  CHECK(result.records[0].record_id == "CI:1");
  CHECK_FALSE(result.records[0].pub_year);
  std::vector<std::string> fields;
  for (const auto& issue : result.report.issues) fields.push_back(issue.field);
  CHECK(fields == std::vector<std::string>{"UT", "TI", "PY"});
  CHECK(result.report.issues[0].line == 1);
}

TEST_CASE("citation-index duplicate ids keep the first record") {
  auto result = parse_index_text("TI A\nPY 1970\nUT U\nER\nTI B\nPY 1971\nUT U\nER\n");
  REQUIRE(result.records.size() == 1);
  CHECK(result.records[0].title == "A");
  REQUIRE(result.report.issues.size() == 1);
  CHECK(result.report.issues[0].kind == ParseIssue::Kind::DuplicateId);
}

TEST_CASE("citation-index malformed blocks carry a line number") {
  try {
    parse_index_text("FN x\nPT J\nTI unterminated\nPY 1970\n");
    FAIL("expected MalformedRecord");
  } catch (const MalformedRecord& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_index_text("PT J\nTI a\nEF\n"), MalformedRecord);
  CHECK_THROWS_AS(parse_index_text("   orphan continuation\n"), MalformedRecord);
  CHECK_THROWS_AS(parse_index_text("PT J\nnot a tag line\nER\n"), MalformedRecord);
}

TEST_CASE("medline fixture joins continuation lines") {
  std::ifstream in(std::string(REFSTAB_FIXTURES) + "/medline_2.txt");
  ParseResult result = parse_medline_export(in);
  REQUIRE(result.records.size() == 2);
  CHECK(result.report.empty());
  CHECK(result.records[0].record_id == "4316300");
  CHECK(result.records[0].source == Source::Medline);
  CHECK(result.records[0].title == "RNA-dependent DNA polymerase in virions of RNA tumour viruses.");
  CHECK(result.records[0].pub_year == 1970);
  CHECK(result.records[0].cited_refs.empty());
  CHECK(result.records[1].title == "Avian tumor virus studies.");
  CHECK(result.records[1].pub_year == 1971);
}

TEST_CASE("medline edge cases") {
  CHECK(parse_medline_text("").records.empty());
  CHECK(parse_medline_text("\n\n   \n").records.empty());
  auto dated = parse_medline_text("PMID- 1\nDP  - 1970 Jun\nTI  - T\n");
  REQUIRE(dated.records.size() == 1);
  CHECK(dated.records[0].pub_year == 1970);

  auto missing = parse_medline_text("PMID- 7\nTI  - T\nDP  - Spring\n");
  REQUIRE(missing.records.size() == 1);
  CHECK_FALSE(missing.records[0].pub_year);
  REQUIRE(missing.report.issues.size() == 1);
  CHECK(missing.report.issues[0].field == "DP");

  CHECK_THROWS_AS(parse_medline_text("      continuation first\n"), MalformedRecord);
  CHECK_THROWS_AS(parse_medline_text("PMID- 1\ngarbage\n"), MalformedRecord);
}

TEST_CASE("parsing is deterministic") {
  std::ifstream a(std::string(REFSTAB_FIXTURES) + "/citation_index_3.txt");
  std::ifstream b(std::string(REFSTAB_FIXTURES) + "/citation_index_3.txt");
  CHECK(parse_citation_index_export(a).records == parse_citation_index_export(b).records);
}
