#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "wireclass/dataset.hpp"

// Descriptive weekly analytics: packet totals, top destinations and
// protocols, and Length statistics matching WEKA's attribute panel
// (sample standard deviation, distinct and missing counts).

namespace wireclass {

struct LengthStats {
    double minimum = 0.0;
    double maximum = 0.0;
    double mean = 0.0;
    double stddev = 0.0;  // n-1 denominator; 0 by convention for n < 2
    std::size_t distinct = 0;
    std::size_t missing = 0;
    std::size_t count = 0;   // non-missing values
    bool degenerate = false;
};

struct FrequencyEntry {
    std::string value;
    std::int64_t count = 0;

    bool operator==(const FrequencyEntry&) const = default;
};

// Top-k slice plus a remainder row so entries + other always total the
// underlying instance count.
struct FrequencyTable {
    std::vector<FrequencyEntry> entries;
    std::int64_t other_count = 0;
    std::size_t other_values = 0;

    std::int64_t total() const;
};

struct TrafficReport {
    std::string batch_label;
    std::size_t packet_count = 0;
    FrequencyTable destination_counts;
    FrequencyTable protocol_counts;
    LengthStats length_stats;
};

// Exact frequency counts, descending, ties broken lexicographically by
// value; truncated to top_k when given (no remainder row).
std::vector<FrequencyEntry> tabulate(const Dataset& d, const std::string& attribute,
                                     std::optional<std::size_t> top_k = std::nullopt);

FrequencyTable top_table(const Dataset& d, const std::string& attribute,
                         std::optional<std::size_t> top_k = std::nullopt);

LengthStats length_statistics(const Dataset& d, const std::string& attribute);

// One report per labeled batch over the conventional Destination /
// Protocol / Length attributes. An empty batch yields zero counts.
TrafficReport traffic_report(const std::string& label, const Dataset& d,
                             std::optional<std::size_t> top_k = std::nullopt);
std::vector<TrafficReport> weekly_report(const std::vector<std::pair<std::string, Dataset>>& batches,
                                         std::optional<std::size_t> top_k = std::nullopt);

// Optional per-week accuracy join for the rendered summary table.
struct WeekAccuracy {
    std::string label;
    std::optional<double> destination_accuracy;  // fraction
    std::optional<double> protocol_accuracy;     // fraction
    std::optional<double> split_percent;
};

std::string render_reports_text(const std::vector<TrafficReport>& reports,
                                const std::vector<WeekAccuracy>* accuracy = nullptr);
std::string render_reports_csv(const std::vector<TrafficReport>& reports);
nlohmann::ordered_json reports_to_json(const std::vector<TrafficReport>& reports,
                                       const std::vector<WeekAccuracy>* accuracy = nullptr);

}  // namespace wireclass
