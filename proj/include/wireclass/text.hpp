#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

// Small text helpers shared by the parsers and writers. Number formatting
// goes through std::to_chars so that every emitted double parses back to
// the identical bit pattern.

namespace wireclass {

// Shortest decimal representation that round-trips the exact double.
std::string double_to_string(double value);

// Like double_to_string but guaranteed to contain no exponent, for the
// strict capture-CSV time column. Falls back to fixed notation with just
// enough digits to round-trip.
std::string double_to_plain_string(double value);

// Strict C-locale numerals: digits with at most one '.', no sign, no
// exponent, no grouping. Returns nullopt on anything else.
std::optional<double> parse_plain_decimal(std::string_view text);
std::optional<std::int64_t> parse_plain_integer(std::string_view text);

// Liberal double parse (signs/exponent allowed) for ARFF numeric cells.
std::optional<double> parse_double(std::string_view text);

bool contains_whitespace(std::string_view text);

std::string_view trim(std::string_view text);

// Case-insensitive comparison of ASCII keywords (@relation vs @RELATION).
bool iequals(std::string_view a, std::string_view b);
std::string to_lower(std::string_view text);

// ARFF-style quoting: single quotes with backslash escapes. A token is
// quoted when empty or when it contains characters that would confuse the
// tokenizer (whitespace, comma, quotes, braces, '%', '?', backslash).
bool needs_arff_quoting(std::string_view value);
std::string arff_quote(std::string_view value);

// Inverse of arff_quote for a string holding exactly one token (bare or
// quoted). Throws Error on unterminated quotes or unknown escapes.
std::string arff_unquote(std::string_view token);

// Spreadsheet-style lowercase column letters: 0 -> "a", 25 -> "z", 26 -> "aa".
std::string column_letters(std::size_t index);

}  // namespace wireclass
