#include "wireclass/capture.hpp"

#include <array>
#include <istream>
#include <ostream>
#include <sstream>

#include "wireclass/text.hpp"

namespace wireclass {

std::string MalformedInput::describe(const std::vector<MalformedRow>& rows) {
    if (rows.empty())
        return "malformed input";
    std::string msg = std::to_string(rows.size()) + " malformed row(s); first at line " +
                      std::to_string(rows.front().line) + ": " + rows.front().reason;
    return msg;
}

namespace {

constexpr std::array<const char*, 7> kColumnNames = {
    "No.", "Time", "Source", "Destination", "Protocol", "Length", "Info"};

struct RawRecord {
    std::vector<std::string> fields;
    std::size_t line = 0;  // 1-based line where the record started
};

// RFC 4180 reader: handles quoted fields, doubled quotes, embedded
// newlines, and both LF and CRLF line endings.
class CsvReader {
public:
    CsvReader(std::istream& in, char delimiter) : in_(in), delimiter_(delimiter) {}

    bool next(RawRecord& out) {
        out.fields.clear();
        std::string field;
        bool in_quotes = false;
        bool any_char = false;
        bool field_was_quoted = false;
        out.line = line_;
        int c;
        while ((c = in_.get()) != std::char_traits<char>::eof()) {
            any_char = true;
            char ch = static_cast<char>(c);
            if (in_quotes) {
                if (ch == '"') {
                    if (in_.peek() == '"') {
                        in_.get();
                        field.push_back('"');
                    } else {
                        in_quotes = false;
                    }
                } else {
                    if (ch == '\n')
                        ++line_;
                    field.push_back(ch);
                }
                continue;
            }
            if (ch == '"' && field.empty() && !field_was_quoted) {
                in_quotes = true;
                field_was_quoted = true;
                continue;
            }
            if (ch == delimiter_) {
                out.fields.push_back(std::move(field));
                field.clear();
                field_was_quoted = false;
                continue;
            }
            if (ch == '\r') {
                if (in_.peek() == '\n')
                    in_.get();
                ++line_;
                out.fields.push_back(std::move(field));
                return finish(out);
            }
            if (ch == '\n') {
                ++line_;
                out.fields.push_back(std::move(field));
                return finish(out);
            }
            field.push_back(ch);
        }
        if (!any_char)
            return false;
        out.fields.push_back(std::move(field));
        return finish(out);
    }

private:
    bool finish(RawRecord& out) {
        // A bare newline produces a single empty field; skip such blank rows.
        if (out.fields.size() == 1 && out.fields[0].empty())
            return next(out);
        return true;
    }

    std::istream& in_;
    char delimiter_;
    std::size_t line_ = 1;
};

bool is_header_row(const RawRecord& rec) {
    if (rec.fields.size() != kColumnNames.size())
        return false;
    for (std::size_t i = 0; i < kColumnNames.size(); ++i)
        if (!iequals(trim(rec.fields[i]), kColumnNames[i]))
            return false;
    return true;
}

bool validate_token(const std::string& value, const char* what, std::string& reason) {
    if (value.empty()) {
        reason = std::string(what) + " is empty";
        return false;
    }
    if (contains_whitespace(value)) {
        reason = std::string(what) + " contains whitespace";
        return false;
    }
    return true;
}

std::string csv_quote(const std::string& value) {
    std::string out;
    out.reserve(value.size() + 2);
    out.push_back('"');
    for (char c : value) {
        if (c == '"')
            out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

CaptureBatch parse_capture_csv(std::istream& input, const ParseOptions& options,
                               ParseReport* report) {
    CsvReader reader(input, options.delimiter);
    CaptureBatch batch;
    std::vector<MalformedRow> malformed;

    RawRecord rec;
    bool first = true;
    bool any_record = false;
    while (reader.next(rec)) {
        any_record = true;
        if (first) {
            first = false;
            bool header = is_header_row(rec);
            if (options.header_mode == HeaderMode::require && !header) {
                malformed.push_back({rec.line, "missing header row"});
                // fall through: the row is still not data we can trust
                if (!options.skip_malformed)
                    throw MalformedInput(std::move(malformed));
                continue;
            }
            if (options.header_mode != HeaderMode::none && header)
                continue;
        }

        std::string reason;
        if (rec.fields.size() != kColumnNames.size()) {
            reason = "expected 7 columns, got " + std::to_string(rec.fields.size());
        } else {
            PacketRecord pr;
            auto no = parse_plain_integer(rec.fields[0]);
            auto time = parse_plain_decimal(rec.fields[1]);
            auto length = parse_plain_integer(rec.fields[5]);
            if (!no || *no < 1)
                reason = "No. is not a positive integer: '" + rec.fields[0] + "'";
            else if (!time)
                reason = "Time is not a plain decimal: '" + rec.fields[1] + "'";
            else if (!length)
                reason = "Length is not an integer: '" + rec.fields[5] + "'";
            else if (*length < 1)
                reason = "Length must be >= 1, got " + rec.fields[5];
            else if (!validate_token(rec.fields[2], "Source", reason) ||
                     !validate_token(rec.fields[3], "Destination", reason) ||
                     !validate_token(rec.fields[4], "Protocol", reason)) {
                // reason already set
            } else {
                pr.no = *no;
                pr.time = *time;
                pr.source = rec.fields[2];
                pr.destination = rec.fields[3];
                pr.protocol = rec.fields[4];
                pr.length = *length;
                pr.info = rec.fields[6];
                batch.records.push_back(std::move(pr));
                continue;
            }
        }
        malformed.push_back({rec.line, reason});
    }

    if (!any_record)
        throw EmptyInput();
    if (report)
        report->malformed = malformed;
    if (!malformed.empty() && !options.skip_malformed)
        throw MalformedInput(std::move(malformed));

    batch.source_files.push_back({options.source_name, batch.records.size()});
    return batch;
}

CaptureBatch parse_capture_csv(const std::string& text, const ParseOptions& options,
                               ParseReport* report) {
    std::istringstream in(text);
    return parse_capture_csv(in, options, report);
}

void write_capture_csv(const CaptureBatch& batch, std::ostream& out, bool with_header) {
    if (with_header) {
        for (std::size_t i = 0; i < kColumnNames.size(); ++i) {
            if (i)
                out << ',';
            out << csv_quote(kColumnNames[i]);
        }
        out << '\n';
    }
    for (const PacketRecord& r : batch.records) {
        out << csv_quote(std::to_string(r.no)) << ','
            << csv_quote(double_to_plain_string(r.time)) << ','
            << csv_quote(r.source) << ','
            << csv_quote(r.destination) << ','
            << csv_quote(r.protocol) << ','
            << csv_quote(std::to_string(r.length)) << ','
            << csv_quote(r.info) << '\n';
    }
}

CaptureBatch merge_batches(const std::vector<CaptureBatch>& batches, const std::string& label) {
    if (batches.empty())
        throw EmptyInput();
    CaptureBatch merged;
    merged.label = label;
    std::size_t total = 0;
    for (const CaptureBatch& b : batches)
        total += b.records.size();
    merged.records.reserve(total);
    for (const CaptureBatch& b : batches) {
        merged.records.insert(merged.records.end(), b.records.begin(), b.records.end());
        merged.source_files.insert(merged.source_files.end(), b.source_files.begin(),
                                   b.source_files.end());
    }
    return merged;
}

}  // namespace wireclass
