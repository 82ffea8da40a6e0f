#pragma once

#include <istream>

#include "refstab/records.hpp"

namespace refstab {

/// Parses a field-tagged citation-index export (two-letter tags, three-space
/// continuation lines, "ER" record terminator). The record id comes from the
/// UT field, the title from TI, the year from PY and cited references from CR.
///
/// Throws MalformedRecord for a record that is never terminated or for a line
/// that fits neither the tag nor the continuation layout. Missing fields are
/// collected in the report; such records are kept.
ParseResult parse_citation_index_export(std::istream& in);

/// Parses a MEDLINE export ("TAG - value", six-space continuation lines,
/// blank-line record separator). Record id from PMID, title from TI, year from
/// the leading four digits of DP.
ParseResult parse_medline_export(std::istream& in);

}  // namespace refstab
