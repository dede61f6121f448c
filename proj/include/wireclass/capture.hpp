#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wireclass/errors.hpp"

// Wireshark "packet list" CSV ingestion. One export has seven columns in
// fixed order: No., Time, Source, Destination, Protocol, Length, Info.
// Quoting follows RFC 4180 (double quotes, embedded quotes doubled,
// newlines allowed inside quoted fields).

namespace wireclass {

struct PacketRecord {
    std::int64_t no = 0;       // capture sequence number, >= 1
    double time = 0.0;         // seconds since capture start, >= 0
    std::string source;        // address token (IPv4/IPv6/MAC/name)
    std::string destination;   // address token
    std::string protocol;      // protocol token, e.g. "TCP"
    std::int64_t length = 0;   // frame length in bytes, >= 1
    std::string info;          // free text

    bool operator==(const PacketRecord&) const = default;
};

struct SourceFile {
    std::string name;
    std::size_t record_count = 0;

    bool operator==(const SourceFile&) const = default;
};

struct CaptureBatch {
    std::string label;
    std::vector<PacketRecord> records;
    std::vector<SourceFile> source_files;
};

enum class HeaderMode {
    auto_detect,  // treat the first row as a header iff it matches the column names
    require,      // first row must be the header
    none,         // every row is data
};

struct ParseOptions {
    char delimiter = ',';
    HeaderMode header_mode = HeaderMode::auto_detect;
    bool skip_malformed = false;  // collect bad rows instead of failing
    std::string source_name = "<stream>";
};

struct ParseReport {
    std::vector<MalformedRow> malformed;
};

// Parses one export. Malformed rows (wrong column count, bad numerals,
// duplicate No., zero Length, ...) are collected; unless
// options.skip_malformed is set, any malformed row fails the whole parse
// with MalformedInput. A file without even a header throws EmptyInput.
CaptureBatch parse_capture_csv(std::istream& input, const ParseOptions& options = {},
                               ParseReport* report = nullptr);
CaptureBatch parse_capture_csv(const std::string& text, const ParseOptions& options = {},
                               ParseReport* report = nullptr);

// Writes the batch back in the same dialect (all fields quoted, like
// Wireshark's own export). parse(write(b)) reproduces b field for field.
void write_capture_csv(const CaptureBatch& batch, std::ostream& out, bool with_header = true);

// Concatenates batches in argument order under a new label.
CaptureBatch merge_batches(const std::vector<CaptureBatch>& batches, const std::string& label);

}  // namespace wireclass
