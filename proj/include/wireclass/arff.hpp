#pragma once

#include <iosfwd>
#include <string>

#include "wireclass/dataset.hpp"

// ARFF reader/writer for the numeric/nominal/string subset. The exact
// quoting and escaping rules are documented in docs/formats.md; on that
// subset parse_arff(write_arff(d)) reproduces d exactly.

namespace wireclass {

void write_arff(const Dataset& d, std::ostream& out);
std::string write_arff_string(const Dataset& d);

// Accepts % comment lines, case-insensitive keywords, '?' missing values,
// and single- or double-quoted tokens with backslash escapes. Sparse data
// rows and date/relational attributes raise UnsupportedFeatureError.
Dataset parse_arff(std::istream& in);
Dataset parse_arff_string(const std::string& text);

}  // namespace wireclass
