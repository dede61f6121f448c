#include "wireclass/text.hpp"

#include "wireclass/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <system_error>

namespace wireclass {

std::string double_to_string(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

std::string double_to_plain_string(double value) {
    std::string shortest = double_to_string(value);
    if (shortest.find('e') == std::string::npos && shortest.find('E') == std::string::npos)
        return shortest;
    char buf[1024];
    for (int precision = 1; precision <= 25; ++precision) {
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                       std::chars_format::fixed, precision);
        if (ec != std::errc{})
            continue;
        double back = 0.0;
        auto res = std::from_chars(buf, ptr, back);
        if (res.ec == std::errc{} && res.ptr == ptr && back == value)
            return std::string(buf, ptr);
    }
    return shortest;  // pathological magnitudes keep the exponent form
}

std::optional<double> parse_plain_decimal(std::string_view text) {
    if (text.empty())
        return std::nullopt;
    bool seen_dot = false;
    bool seen_digit = false;
    for (char c : text) {
        if (c == '.') {
            if (seen_dot)
                return std::nullopt;
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            seen_digit = true;
        } else {
            return std::nullopt;
        }
    }
    if (!seen_digit)
        return std::nullopt;
    std::string normalized(text);
    if (normalized.front() == '.')
        normalized.insert(normalized.begin(), '0');
    if (normalized.back() == '.')
        normalized.pop_back();
    double value = 0.0;
    auto res = std::from_chars(normalized.data(), normalized.data() + normalized.size(), value);
    if (res.ec != std::errc{} || res.ptr != normalized.data() + normalized.size())
        return std::nullopt;
    return value;
}

std::optional<std::int64_t> parse_plain_integer(std::string_view text) {
    if (text.empty())
        return std::nullopt;
    if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return std::nullopt;
    std::int64_t value = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        return std::nullopt;
    return value;
}

std::optional<double> parse_double(std::string_view text) {
    if (text.empty())
        return std::nullopt;
    if (text.front() == '+')
        text.remove_prefix(1);
    if (text.empty())
        return std::nullopt;
    double value = 0.0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        return std::nullopt;
    if (!std::isfinite(value))
        return std::nullopt;
    return value;
}

bool contains_whitespace(std::string_view text) {
    return std::any_of(text.begin(), text.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    return text;
}

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    return true;
}

std::string to_lower(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool needs_arff_quoting(std::string_view value) {
    if (value.empty())
        return true;
    return value.find_first_of(" \t\n\r',\"{}%?\\") != std::string_view::npos;
}

std::string arff_quote(std::string_view value) {
    if (!needs_arff_quoting(value))
        return std::string(value);
    std::string out;
    out.reserve(value.size() + 2);
    out.push_back('\'');
    for (char c : value) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '\'': out += "\\'"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out.push_back(c);
        }
    }
    out.push_back('\'');
    return out;
}

std::string arff_unquote(std::string_view token) {
    if (token.empty() || (token.front() != '\'' && token.front() != '"'))
        return std::string(token);
    char quote = token.front();
    std::string out;
    std::size_t i = 1;
    while (i < token.size()) {
        char c = token[i];
        if (c == '\\') {
            if (i + 1 >= token.size())
                throw Error("dangling backslash in quoted token");
            char e = token[i + 1];
            switch (e) {
                case '\\': out.push_back('\\'); break;
                case '\'': out.push_back('\''); break;
                case '"': out.push_back('"'); break;
                case 'n': out.push_back('\n'); break;
                case 'r': out.push_back('\r'); break;
                case 't': out.push_back('\t'); break;
                default:
                    throw Error(std::string("unsupported escape '\\") + e + "'");
            }
            i += 2;
            continue;
        }
        if (c == quote) {
            if (i + 1 != token.size())
                throw Error("trailing text after quoted token");
            return out;
        }
        out.push_back(c);
        ++i;
    }
    throw Error("unterminated quoted token");
}

std::string column_letters(std::size_t index) {
    std::string out;
    std::size_t i = index;
    while (true) {
        out.insert(out.begin(), static_cast<char>('a' + i % 26));
        if (i < 26)
            break;
        i = i / 26 - 1;
    }
    return out;
}

}  // namespace wireclass
