#include "wireclass/report.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "wireclass/text.hpp"

namespace wireclass {

std::int64_t FrequencyTable::total() const {
    std::int64_t t = other_count;
    for (const FrequencyEntry& e : entries)
        t += e.count;
    return t;
}

namespace {

std::size_t require_attribute(const Dataset& d, const std::string& attribute, AttrKind kind) {
    auto idx = d.attribute_index(attribute);
    if (!idx)
        throw UnknownAttributeError("no attribute named '" + attribute + "'");
    if (d.attributes[*idx].kind != kind) {
        if (kind == AttrKind::nominal)
            throw NotNominalError("attribute '" + attribute + "' is not nominal");
        throw NotNumericError("attribute '" + attribute + "' is not numeric");
    }
    return *idx;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n\r") == std::string::npos)
        return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"')
            out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string format_percent(double fraction) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f %%", fraction * 100.0);
    return buf;
}

// Attribute-panel style: integers plain, reals with up to 3 decimals.
std::string panel_number(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15)
        return std::to_string(static_cast<long long>(v));
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    std::string s = buf;
    while (!s.empty() && s.back() == '0')
        s.pop_back();
    if (!s.empty() && s.back() == '.')
        s.pop_back();
    return s;
}

}  // namespace

std::vector<FrequencyEntry> tabulate(const Dataset& d, const std::string& attribute,
                                     std::optional<std::size_t> top_k) {
    const std::size_t idx = require_attribute(d, attribute, AttrKind::nominal);
    const Attribute& attr = d.attributes[idx];
    std::vector<std::int64_t> counts(attr.values.size(), 0);
    for (const Instance& inst : d.instances) {
        const Cell& cell = inst[idx];
        if (cell.kind == Cell::Kind::nominal)
            ++counts[cell.index];
    }
    std::vector<FrequencyEntry> out;
    for (std::size_t v = 0; v < counts.size(); ++v)
        if (counts[v] > 0)
            out.push_back({attr.values[v], counts[v]});
    std::sort(out.begin(), out.end(), [](const FrequencyEntry& a, const FrequencyEntry& b) {
        if (a.count != b.count)
            return a.count > b.count;
        return a.value < b.value;
    });
    if (top_k && out.size() > *top_k)
        out.resize(*top_k);
    return out;
}

FrequencyTable top_table(const Dataset& d, const std::string& attribute,
                         std::optional<std::size_t> top_k) {
    std::vector<FrequencyEntry> all = tabulate(d, attribute);
    FrequencyTable table;
    if (top_k && all.size() > *top_k) {
        table.entries.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(*top_k));
        for (std::size_t i = *top_k; i < all.size(); ++i) {
            table.other_count += all[i].count;
            ++table.other_values;
        }
    } else {
        table.entries = std::move(all);
    }
    return table;
}

LengthStats length_statistics(const Dataset& d, const std::string& attribute) {
    const std::size_t idx = require_attribute(d, attribute, AttrKind::numeric);
    LengthStats stats;
    std::set<double> distinct;
    double mean = 0.0, m2 = 0.0;
    std::size_t n = 0;
    for (const Instance& inst : d.instances) {
        const Cell& cell = inst[idx];
        if (cell.kind != Cell::Kind::number) {
            ++stats.missing;
            continue;
        }
        const double v = cell.number;
        distinct.insert(v);
        ++n;
        if (n == 1) {
            stats.minimum = stats.maximum = v;
        } else {
            stats.minimum = std::min(stats.minimum, v);
            stats.maximum = std::max(stats.maximum, v);
        }
        // Welford update; the tests check it against a two-pass reference.
        const double delta = v - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (v - mean);
    }
    if (n == 0)
        throw AllMissingError("attribute '" + attribute + "' has no observed values");
    stats.count = n;
    stats.mean = mean;
    stats.distinct = distinct.size();
    if (n >= 2) {
        stats.stddev = std::sqrt(m2 / static_cast<double>(n - 1));
    } else {
        stats.stddev = 0.0;
        stats.degenerate = true;
    }
    return stats;
}

TrafficReport traffic_report(const std::string& label, const Dataset& d,
                             std::optional<std::size_t> top_k) {
    TrafficReport report;
    report.batch_label = label;
    report.packet_count = d.instances.size();
    if (d.instances.empty()) {
        report.length_stats.degenerate = true;
        return report;
    }
    report.destination_counts = top_table(d, "Destination", top_k);
    report.protocol_counts = top_table(d, "Protocol", top_k);
    try {
        report.length_stats = length_statistics(d, "Length");
    } catch (const AllMissingError&) {
        report.length_stats = LengthStats{};
        report.length_stats.missing = d.instances.size();
        report.length_stats.degenerate = true;
    }
    return report;
}

std::vector<TrafficReport> weekly_report(
    const std::vector<std::pair<std::string, Dataset>>& batches,
    std::optional<std::size_t> top_k) {
    if (batches.empty())
        throw EmptyInput();
    std::vector<TrafficReport> reports;
    reports.reserve(batches.size());
    for (const auto& [label, dataset] : batches)
        reports.push_back(traffic_report(label, dataset, top_k));
    return reports;
}

namespace {

void render_table_text(const FrequencyTable& table, const std::string& heading,
                       const std::string& value_header, std::ostringstream& out) {
    out << heading << '\n';
    std::size_t value_width = value_header.size();
    for (const FrequencyEntry& e : table.entries)
        value_width = std::max(value_width, e.value.size());
    if (table.other_values > 0)
        value_width = std::max(value_width, std::string("(other)").size());
    out << "  #     " << value_header << std::string(value_width - value_header.size() + 2, ' ')
        << "Count\n";
    std::size_t rank = 1;
    for (const FrequencyEntry& e : table.entries) {
        std::string r = std::to_string(rank++);
        out << "  " << r << std::string(r.size() < 6 ? 6 - r.size() : 1, ' ') << e.value
            << std::string(value_width - e.value.size() + 2, ' ') << e.count << '\n';
    }
    if (table.other_values > 0) {
        const std::string tag = "(other)";
        out << "  -     " << tag << std::string(value_width - tag.size() + 2, ' ')
            << table.other_count << "  [" << table.other_values << " more values]\n";
    }
    if (table.entries.empty() && table.other_values == 0)
        out << "  (no values)\n";
    out << '\n';
}

}  // namespace

std::string render_reports_text(const std::vector<TrafficReport>& reports,
                                const std::vector<WeekAccuracy>* accuracy) {
    std::ostringstream out;
    for (const TrafficReport& r : reports) {
        out << "=== Traffic report: " << r.batch_label << " ===\n\n";
        out << "Packets: " << r.packet_count << "\n\n";
        render_table_text(r.destination_counts, "Top destinations", "Destination", out);
        render_table_text(r.protocol_counts, "Top protocols", "Protocol", out);
        out << "Length statistics\n";
        const LengthStats& s = r.length_stats;
        out << "  Minimum   " << panel_number(s.minimum) << '\n';
        out << "  Maximum   " << panel_number(s.maximum) << '\n';
        out << "  Mean      " << panel_number(s.mean) << '\n';
        out << "  StdDev    " << panel_number(s.stddev) << '\n';
        out << "  Distinct  " << s.distinct << '\n';
        out << "  Missing   " << s.missing << '\n';
        out << '\n';
    }
    if (accuracy && !accuracy->empty()) {
        out << "=== Accuracy per week ===\n\n";
        std::size_t label_width = std::string("Week").size();
        for (const WeekAccuracy& w : *accuracy)
            label_width = std::max(label_width, w.label.size());
        out << "Week" << std::string(label_width - 4 + 2, ' ')
            << "Destination    Protocol       Split\n";
        for (const WeekAccuracy& w : *accuracy) {
            out << w.label << std::string(label_width - w.label.size() + 2, ' ');
            std::string dest = w.destination_accuracy ? format_percent(*w.destination_accuracy)
                                                      : std::string("-");
            std::string proto = w.protocol_accuracy ? format_percent(*w.protocol_accuracy)
                                                    : std::string("-");
            out << dest << std::string(dest.size() < 15 ? 15 - dest.size() : 1, ' ');
            out << proto << std::string(proto.size() < 15 ? 15 - proto.size() : 1, ' ');
            if (w.split_percent)
                out << double_to_string(*w.split_percent) << '%';
            else
                out << '-';
            out << '\n';
        }
    }
    return out.str();
}

std::string render_reports_csv(const std::vector<TrafficReport>& reports) {
    std::ostringstream out;
    out << "batch,section,rank,value,count\n";
    for (const TrafficReport& r : reports) {
        const std::string batch = csv_field(r.batch_label);
        out << batch << ",summary,,packets," << r.packet_count << '\n';
        auto emit_table = [&](const FrequencyTable& table, const char* section) {
            std::size_t rank = 1;
            for (const FrequencyEntry& e : table.entries)
                out << batch << ',' << section << ',' << rank++ << ',' << csv_field(e.value)
                    << ',' << e.count << '\n';
            if (table.other_values > 0)
                out << batch << ',' << section << ",other,," << table.other_count << '\n';
        };
        emit_table(r.destination_counts, "destination");
        emit_table(r.protocol_counts, "protocol");
        const LengthStats& s = r.length_stats;
        out << batch << ",length,,minimum," << double_to_string(s.minimum) << '\n';
        out << batch << ",length,,maximum," << double_to_string(s.maximum) << '\n';
        out << batch << ",length,,mean," << double_to_string(s.mean) << '\n';
        out << batch << ",length,,stddev," << double_to_string(s.stddev) << '\n';
        out << batch << ",length,,distinct," << s.distinct << '\n';
        out << batch << ",length,,missing," << s.missing << '\n';
    }
    return out.str();
}

nlohmann::ordered_json reports_to_json(const std::vector<TrafficReport>& reports,
                                       const std::vector<WeekAccuracy>* accuracy) {
    nlohmann::ordered_json root;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const TrafficReport& r : reports) {
        nlohmann::ordered_json jr;
        jr["label"] = r.batch_label;
        jr["packet_count"] = r.packet_count;
        auto table_json = [](const FrequencyTable& table) {
            nlohmann::ordered_json jt;
            nlohmann::ordered_json entries = nlohmann::ordered_json::array();
            for (const FrequencyEntry& e : table.entries) {
                nlohmann::ordered_json je;
                je["value"] = e.value;
                je["count"] = e.count;
                entries.push_back(std::move(je));
            }
            jt["entries"] = std::move(entries);
            jt["other_count"] = table.other_count;
            jt["other_values"] = table.other_values;
            return jt;
        };
        jr["destinations"] = table_json(r.destination_counts);
        jr["protocols"] = table_json(r.protocol_counts);
        nlohmann::ordered_json js;
        js["minimum"] = r.length_stats.minimum;
        js["maximum"] = r.length_stats.maximum;
        js["mean"] = r.length_stats.mean;
        js["stddev"] = r.length_stats.stddev;
        js["distinct"] = r.length_stats.distinct;
        js["missing"] = r.length_stats.missing;
        js["degenerate"] = r.length_stats.degenerate;
        jr["length"] = std::move(js);
        list.push_back(std::move(jr));
    }
    root["reports"] = std::move(list);
    if (accuracy && !accuracy->empty()) {
        nlohmann::ordered_json acc = nlohmann::ordered_json::array();
        for (const WeekAccuracy& w : *accuracy) {
            nlohmann::ordered_json jw;
            jw["week"] = w.label;
            if (w.destination_accuracy)
                jw["destination_accuracy"] = *w.destination_accuracy;
            if (w.protocol_accuracy)
                jw["protocol_accuracy"] = *w.protocol_accuracy;
            if (w.split_percent)
                jw["split_percent"] = *w.split_percent;
            acc.push_back(std::move(jw));
        }
        root["accuracy"] = std::move(acc);
    }
    return root;
}

}  // namespace wireclass
