#include "wireclass/arff.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "wireclass/text.hpp"

namespace wireclass {

namespace {

void write_cell(const Cell& cell, const Attribute& attr, std::ostream& out) {
    switch (cell.kind) {
        case Cell::Kind::missing:
            out << '?';
            break;
        case Cell::Kind::number:
            out << double_to_string(cell.number);
            break;
        case Cell::Kind::nominal:
            out << arff_quote(attr.values[cell.index]);
            break;
        case Cell::Kind::text:
            out << arff_quote(cell.text);
            break;
    }
}

struct Token {
    std::string value;
    bool quoted = false;
};

// Splits a comma-separated ARFF value list. Quoted tokens ('...' or
// "...") may contain commas and use backslash escapes; bare tokens are
// trimmed. `text` must already exclude any surrounding braces.
std::vector<Token> split_values(std::string_view text, std::size_t line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    auto syntax = [line](const std::string& why) { return ArffSyntaxError(line, why); };
    while (true) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t'))
            ++i;
        if (i < text.size() && (text[i] == '\'' || text[i] == '"')) {
            char quote = text[i];
            ++i;
            std::string value;
            bool closed = false;
            while (i < text.size()) {
                char c = text[i];
                if (c == '\\') {
                    if (i + 1 >= text.size())
                        throw syntax("dangling backslash in quoted value");
                    char e = text[i + 1];
                    switch (e) {
                        case '\\': value.push_back('\\'); break;
                        case '\'': value.push_back('\''); break;
                        case '"': value.push_back('"'); break;
                        case 'n': value.push_back('\n'); break;
                        case 'r': value.push_back('\r'); break;
                        case 't': value.push_back('\t'); break;
                        default:
                            throw syntax(std::string("unsupported escape '\\") + e + "'");
                    }
                    i += 2;
                    continue;
                }
                if (c == quote) {
                    closed = true;
                    ++i;
                    break;
                }
                value.push_back(c);
                ++i;
            }
            if (!closed)
                throw syntax("unterminated quoted value");
            while (i < text.size() && (text[i] == ' ' || text[i] == '\t'))
                ++i;
            if (i < text.size() && text[i] != ',')
                throw syntax("unexpected character after quoted value");
            tokens.push_back({std::move(value), true});
        } else {
            std::size_t start = i;
            while (i < text.size() && text[i] != ',')
                ++i;
            std::string value(trim(text.substr(start, i - start)));
            tokens.push_back({std::move(value), false});
        }
        if (i >= text.size())
            break;
        ++i;  // consume the comma
        if (i == text.size()) {
            tokens.push_back({"", false});  // trailing comma -> empty bare token
            break;
        }
    }
    return tokens;
}

Cell parse_cell(const Token& tok, const Attribute& attr, std::size_t line) {
    if (!tok.quoted && tok.value == "?")
        return Cell::missing();
    if (!tok.quoted && tok.value.empty())
        throw ArffSyntaxError(line, "empty value (quote it or use ?)");
    switch (attr.kind) {
        case AttrKind::numeric: {
            auto v = parse_double(tok.value);
            if (!v)
                throw ArffSyntaxError(line, "bad numeric value '" + tok.value + "' for attribute '" +
                                                attr.name + "'");
            return Cell::num(*v);
        }
        case AttrKind::nominal: {
            auto idx = attr.index_of(tok.value);
            if (!idx)
                throw ArffSyntaxError(line, "value '" + tok.value +
                                                "' not in nominal list of attribute '" +
                                                attr.name + "'");
            return Cell::nom(*idx);
        }
        case AttrKind::text:
            return Cell::str(tok.value);
    }
    throw ArffSyntaxError(line, "unreachable attribute kind");
}

// Reads one possibly-quoted name token from `rest`, returning the name and
// advancing `rest` past it.
std::string take_name_token(std::string_view& rest, std::size_t line) {
    rest = trim(rest);
    if (rest.empty())
        throw ArffSyntaxError(line, "missing name");
    if (rest.front() == '\'' || rest.front() == '"') {
        char quote = rest.front();
        std::string value;
        std::size_t i = 1;
        while (i < rest.size()) {
            char c = rest[i];
            if (c == '\\' && i + 1 < rest.size()) {
                char e = rest[i + 1];
                switch (e) {
                    case '\\': value.push_back('\\'); break;
                    case '\'': value.push_back('\''); break;
                    case '"': value.push_back('"'); break;
                    case 'n': value.push_back('\n'); break;
                    case 'r': value.push_back('\r'); break;
                    case 't': value.push_back('\t'); break;
                    default:
                        throw ArffSyntaxError(line, std::string("unsupported escape '\\") + e + "'");
                }
                i += 2;
                continue;
            }
            if (c == quote) {
                rest.remove_prefix(i + 1);
                return value;
            }
            value.push_back(c);
            ++i;
        }
        throw ArffSyntaxError(line, "unterminated quoted name");
    }
    std::size_t end = rest.find_first_of(" \t");
    std::string value(rest.substr(0, end));
    rest.remove_prefix(end == std::string_view::npos ? rest.size() : end);
    return value;
}

}  // namespace

void write_arff(const Dataset& d, std::ostream& out) {
    validate(d);
    out << "@relation " << arff_quote(d.relation) << "\n\n";
    for (const Attribute& attr : d.attributes) {
        out << "@attribute " << arff_quote(attr.name) << ' ';
        switch (attr.kind) {
            case AttrKind::numeric:
                out << "numeric";
                break;
            case AttrKind::text:
                out << "string";
                break;
            case AttrKind::nominal: {
                out << '{';
                for (std::size_t i = 0; i < attr.values.size(); ++i) {
                    if (i)
                        out << ',';
                    out << arff_quote(attr.values[i]);
                }
                out << '}';
                break;
            }
        }
        out << '\n';
    }
    out << "\n@data\n";
    for (const Instance& inst : d.instances) {
        for (std::size_t i = 0; i < inst.size(); ++i) {
            if (i)
                out << ',';
            write_cell(inst[i], d.attributes[i], out);
        }
        out << '\n';
    }
    if (!out)
        throw IoError("failed writing ARFF output");
}

std::string write_arff_string(const Dataset& d) {
    std::ostringstream out;
    write_arff(d, out);
    return out.str();
}

Dataset parse_arff(std::istream& in) {
    Dataset d;
    bool seen_relation = false;
    bool in_data = false;
    std::unordered_set<std::string> attr_names;
    std::string raw;
    std::size_t line_no = 0;

    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        std::string_view sv = trim(raw);
        if (sv.empty() || sv.front() == '%')
            continue;

        if (!in_data) {
            if (sv.size() >= 9 && iequals(sv.substr(0, 9), "@relation")) {
                if (seen_relation)
                    throw ArffSyntaxError(line_no, "duplicate @relation");
                std::string_view rest = trim(sv.substr(9));
                if (rest.empty())
                    throw ArffSyntaxError(line_no, "missing relation name");
                if (rest.front() == '\'' || rest.front() == '"') {
                    std::string_view cursor = rest;
                    d.relation = take_name_token(cursor, line_no);
                    if (!trim(cursor).empty())
                        throw ArffSyntaxError(line_no, "trailing text after relation name");
                } else {
                    d.relation = std::string(rest);
                }
                seen_relation = true;
                continue;
            }
            if (sv.size() >= 10 && iequals(sv.substr(0, 10), "@attribute")) {
                if (!seen_relation)
                    throw ArffSyntaxError(line_no, "@attribute before @relation");
                std::string_view rest = sv.substr(10);
                std::string name = take_name_token(rest, line_no);
                if (name.empty())
                    throw ArffSyntaxError(line_no, "empty attribute name");
                if (!attr_names.insert(name).second)
                    throw ArffSyntaxError(line_no, "duplicate attribute name '" + name + "'");
                rest = trim(rest);
                if (rest.empty())
                    throw ArffSyntaxError(line_no, "missing attribute type");
                if (iequals(rest, "numeric") || iequals(rest, "real") || iequals(rest, "integer")) {
                    d.attributes.push_back(Attribute::numeric(std::move(name)));
                } else if (iequals(rest, "string")) {
                    d.attributes.push_back(Attribute::text(std::move(name)));
                } else if (iequals(rest.substr(0, 4), "date")) {
                    throw UnsupportedFeatureError("date attributes are not supported");
                } else if (iequals(rest.substr(0, std::min<std::size_t>(rest.size(), 10)),
                                   "relational")) {
                    throw UnsupportedFeatureError("relational attributes are not supported");
                } else if (rest.front() == '{') {
                    std::size_t close = rest.rfind('}');
                    if (close == std::string_view::npos)
                        throw ArffSyntaxError(line_no, "unterminated nominal value list");
                    if (!trim(rest.substr(close + 1)).empty())
                        throw ArffSyntaxError(line_no, "trailing text after nominal value list");
                    std::string_view inside = rest.substr(1, close - 1);
                    std::vector<std::string> values;
                    if (!trim(inside).empty()) {
                        for (Token& t : split_values(inside, line_no)) {
                            if (!t.quoted && t.value.empty())
                                throw ArffSyntaxError(line_no, "empty nominal value (quote it)");
                            values.push_back(std::move(t.value));
                        }
                    }
                    if (values.empty())
                        throw ArffSyntaxError(line_no, "empty nominal value list");
                    std::unordered_set<std::string> seen;
                    for (const std::string& v : values)
                        if (!seen.insert(v).second)
                            throw ArffSyntaxError(line_no, "duplicate nominal value '" + v + "'");
                    d.attributes.push_back(Attribute::nominal(std::move(name), std::move(values)));
                } else {
                    throw ArffSyntaxError(line_no,
                                          "unknown attribute type '" + std::string(rest) + "'");
                }
                continue;
            }
            if (iequals(sv, "@data")) {
                if (!seen_relation)
                    throw ArffSyntaxError(line_no, "@data before @relation");
                in_data = true;
                continue;
            }
            throw ArffSyntaxError(line_no, "unexpected line in header: '" + std::string(sv) + "'");
        }

        // data section
        if (sv.front() == '{')
            throw UnsupportedFeatureError("sparse data rows are not supported");
        std::vector<Token> tokens = split_values(sv, line_no);
        if (tokens.size() != d.attributes.size())
            throw ArffSyntaxError(line_no, "expected " + std::to_string(d.attributes.size()) +
                                               " values, got " + std::to_string(tokens.size()));
        Instance inst;
        inst.reserve(tokens.size());
        for (std::size_t i = 0; i < tokens.size(); ++i)
            inst.push_back(parse_cell(tokens[i], d.attributes[i], line_no));
        d.instances.push_back(std::move(inst));
    }

    if (!seen_relation)
        throw ArffSyntaxError(line_no, "missing @relation");
    if (!in_data)
        throw ArffSyntaxError(line_no, "missing @data section");
    return d;
}

Dataset parse_arff_string(const std::string& text) {
    std::istringstream in(text);
    return parse_arff(in);
}

}  // namespace wireclass
