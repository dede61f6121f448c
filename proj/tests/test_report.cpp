#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>

#include "helpers.hpp"
#include "wireclass/arff.hpp"
#include "wireclass/capture.hpp"
#include "wireclass/report.hpp"

using namespace wireclass;

namespace {

Dataset synthetic_week(unsigned seed, int rows) {
    std::mt19937_64 rng(seed);
    CaptureBatch batch;
    batch.label = "week" + std::to_string(seed);
    std::uniform_int_distribution<int> dest(0, 5);
    std::uniform_int_distribution<int> proto(0, 3);
    std::uniform_int_distribution<std::int64_t> length(42, 1514);
    const char* protos[] = {"TCP", "HTTP", "DNS", "QUIC"};
    for (int i = 0; i < rows; ++i) {
        PacketRecord r;
        r.no = i + 1;
        r.time = 0.001 * i;
        r.source = "10.0.0.1";
        r.destination = "172.21.61." + std::to_string(dest(rng));
        r.protocol = protos[proto(rng)];
        r.length = length(rng);
        r.info = "row";
        batch.records.push_back(std::move(r));
    }
    batch.source_files = {{"synthetic", static_cast<std::size_t>(rows)}};
    return from_capture(batch);
}

}  // namespace

TEST_CASE("tabulate counts exactly with deterministic tie-breaks") {
    Dataset d;
    d.attributes.push_back(Attribute::nominal("Protocol", {"B", "A", "C"}));
    auto add = [&](std::size_t v) { d.instances.push_back({Cell::nom(v)}); };
    add(1);
    add(1);
    add(0);
    add(0);
    add(2);
    std::vector<FrequencyEntry> table = tabulate(d, "Protocol");
    REQUIRE(table.size() == 3);
    // A and B tie at 2; lexicographic order breaks the tie.
    CHECK(table[0] == FrequencyEntry{"A", 2});
    CHECK(table[1] == FrequencyEntry{"B", 2});
    CHECK(table[2] == FrequencyEntry{"C", 1});
    CHECK(tabulate(d, "Protocol", 1).size() == 1);
    CHECK_THROWS_AS(tabulate(d, "Nope"), UnknownAttributeError);
    Dataset numeric;
    numeric.attributes.push_back(Attribute::numeric("Length"));
    numeric.instances.push_back({Cell::num(1)});
    CHECK_THROWS_AS(tabulate(numeric, "Length"), NotNominalError);
}

TEST_CASE("frequency head matches a brute-force recount on synthetic weeks") {
    for (unsigned seed : {1u, 2u, 3u}) {
        Dataset d = synthetic_week(seed, 500);
        for (const char* attr : {"Destination", "Protocol"}) {
            std::map<std::string, std::int64_t> brute;
            const std::size_t idx = *d.attribute_index(attr);
            for (const Instance& inst : d.instances)
                ++brute[d.attributes[idx].values[inst[idx].index]];
            std::vector<FrequencyEntry> table = tabulate(d, attr);
            std::int64_t total = 0;
            for (const FrequencyEntry& e : table) {
                CHECK(brute.at(e.value) == e.count);
                total += e.count;
            }
            CHECK(total == static_cast<std::int64_t>(d.instances.size()));
            for (std::size_t i = 1; i < table.size(); ++i) {
                const bool ordered = table[i - 1].count > table[i].count ||
                                     (table[i - 1].count == table[i].count &&
                                      table[i - 1].value < table[i].value);
                CHECK(ordered);
            }
        }
    }
}

TEST_CASE("frequency tables are invariant under row permutation") {
    Dataset d = synthetic_week(4, 300);
    Dataset shuffled = d;
    std::mt19937_64 rng(5);
    std::shuffle(shuffled.instances.begin(), shuffled.instances.end(), rng);
    CHECK(tabulate(d, "Destination") == tabulate(shuffled, "Destination"));
    CHECK(tabulate(d, "Protocol") == tabulate(shuffled, "Protocol"));
}

TEST_CASE("length statistics match the textbook case") {
    Dataset d;
    d.attributes.push_back(Attribute::numeric("Length"));
    for (double v : {1.0, 2.0, 3.0})
        d.instances.push_back({Cell::num(v)});
    LengthStats s = length_statistics(d, "Length");
    CHECK(s.minimum == 1.0);
    CHECK(s.maximum == 3.0);
    CHECK(s.mean == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(s.stddev == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.distinct == 3);
    CHECK(s.missing == 0);
    CHECK_FALSE(s.degenerate);
}

TEST_CASE("a single value has zero stddev and a degeneracy flag") {
    Dataset d;
    d.attributes.push_back(Attribute::numeric("Length"));
    d.instances.push_back({Cell::num(5.0)});
    LengthStats s = length_statistics(d, "Length");
    CHECK(s.stddev == 0.0);
    CHECK(s.degenerate);
    CHECK(s.minimum == 5.0);
    CHECK(s.maximum == 5.0);
}

TEST_CASE("length statistics errors") {
    Dataset d;
    d.attributes.push_back(Attribute::nominal("Protocol", {"TCP"}));
    d.instances.push_back({Cell::nom(0)});
    CHECK_THROWS_AS(length_statistics(d, "Protocol"), NotNumericError);
    Dataset missing;
    missing.attributes.push_back(Attribute::numeric("Length"));
    missing.instances.push_back({Cell::missing()});
    CHECK_THROWS_AS(length_statistics(missing, "Length"), AllMissingError);
    CHECK_THROWS_AS(length_statistics(missing, "Nope"), UnknownAttributeError);
}

TEST_CASE("length statistics match a two-pass reference on 10k values") {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> value(42.0, 1514.0);
    std::uniform_int_distribution<int> miss(0, 49);
    Dataset d;
    d.attributes.push_back(Attribute::numeric("Length"));
    std::vector<double> observed;
    for (int i = 0; i < 10000; ++i) {
        if (miss(rng) == 0) {
            d.instances.push_back({Cell::missing()});
        } else {
            const double v = value(rng);
            observed.push_back(v);
            d.instances.push_back({Cell::num(v)});
        }
    }
    LengthStats s = length_statistics(d, "Length");

    // Independent two-pass computation.
    double sum = 0.0;
    for (double v : observed)
        sum += v;
    const double mean = sum / static_cast<double>(observed.size());
    double sq = 0.0;
    for (double v : observed)
        sq += (v - mean) * (v - mean);
    const double stddev = std::sqrt(sq / static_cast<double>(observed.size() - 1));
    CHECK(s.mean == doctest::Approx(mean).epsilon(1e-9));
    CHECK(s.stddev == doctest::Approx(stddev).epsilon(1e-9));
    CHECK(s.count == observed.size());
    CHECK(s.missing == 10000 - observed.size());
    CHECK(s.minimum == *std::min_element(observed.begin(), observed.end()));
    CHECK(s.maximum == *std::max_element(observed.begin(), observed.end()));

    // Invariants from the published panel: min <= mean <= max, stddev bound.
    CHECK(s.minimum <= s.mean);
    CHECK(s.mean <= s.maximum);
    CHECK(s.stddev >= 0.0);

    // Order invariance.
    std::shuffle(d.instances.begin(), d.instances.end(), rng);
    LengthStats shuffled = length_statistics(d, "Length");
    CHECK(shuffled.mean == doctest::Approx(s.mean).epsilon(1e-12));
    CHECK(shuffled.stddev == doctest::Approx(s.stddev).epsilon(1e-12));
}

TEST_CASE("top-k tables carry a remainder row that restores the total") {
    Dataset d;
    d.attributes.push_back(Attribute::nominal("Destination", {"a", "b", "c", "d", "e"}));
    const std::size_t counts[] = {5, 4, 3, 2, 1};
    for (std::size_t v = 0; v < 5; ++v)
        for (std::size_t i = 0; i < counts[v]; ++i)
            d.instances.push_back({Cell::nom(v)});
    FrequencyTable table = top_table(d, "Destination", 3);
    REQUIRE(table.entries.size() == 3);
    CHECK(table.other_values == 2);
    CHECK(table.other_count == 3);  // brute force: 2 + 1
    CHECK(table.total() == static_cast<std::int64_t>(d.instances.size()));
}

TEST_CASE("weekly reports cover every batch and tolerate empty ones") {
    std::vector<std::pair<std::string, Dataset>> batches;
    batches.emplace_back("w1", synthetic_week(7, 400));
    Dataset empty;
    empty.attributes.push_back(Attribute::nominal("Destination", {"x"}));
    empty.attributes.push_back(Attribute::nominal("Protocol", {"TCP"}));
    empty.attributes.push_back(Attribute::numeric("Length"));
    batches.emplace_back("w2", empty);
    batches.emplace_back("w3", synthetic_week(8, 100));
    std::vector<TrafficReport> reports = weekly_report(batches, 3);
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].packet_count == 400);
    CHECK(reports[1].packet_count == 0);
    CHECK(reports[1].destination_counts.entries.empty());
    CHECK(reports[2].packet_count == 100);
    CHECK(reports[0].destination_counts.total() == 400);
    CHECK(reports[0].protocol_counts.total() == 400);
    CHECK_THROWS_AS(weekly_report({}, 3), EmptyInput);
}

TEST_CASE("renderers produce the documented shapes") {
    std::vector<std::pair<std::string, Dataset>> batches;
    batches.emplace_back("w1", synthetic_week(9, 200));
    std::vector<TrafficReport> reports = weekly_report(batches, 2);

    SUBCASE("text") {
        std::vector<WeekAccuracy> accuracy = {{"w1", 0.933081, 0.972522, 70.0}};
        const std::string text = render_reports_text(reports, &accuracy);
        CHECK(text.find("=== Traffic report: w1 ===") != std::string::npos);
        CHECK(text.find("Packets: 200") != std::string::npos);
        CHECK(text.find("Top destinations") != std::string::npos);
        CHECK(text.find("Top protocols") != std::string::npos);
        CHECK(text.find("Minimum") != std::string::npos);
        CHECK(text.find("StdDev") != std::string::npos);
        CHECK(text.find("=== Accuracy per week ===") != std::string::npos);
        CHECK(text.find("93.3081 %") != std::string::npos);
        CHECK(text.find("97.2522 %") != std::string::npos);
        CHECK(text.find("70%") != std::string::npos);
    }
    SUBCASE("csv") {
        const std::string csv = render_reports_csv(reports);
        CHECK(csv.rfind("batch,section,rank,value,count\n", 0) == 0);
        CHECK(csv.find("w1,summary,,packets,200") != std::string::npos);
        CHECK(csv.find("w1,destination,1,") != std::string::npos);
        CHECK(csv.find("w1,destination,other,,") != std::string::npos);
        CHECK(csv.find("w1,length,,mean,") != std::string::npos);
    }
    SUBCASE("json") {
        std::vector<WeekAccuracy> accuracy = {{"w1", std::nullopt, 0.972522, 70.0}};
        nlohmann::ordered_json j = reports_to_json(reports, &accuracy);
        CHECK(j["reports"].size() == 1);
        CHECK(j["reports"][0]["label"] == "w1");
        CHECK(j["reports"][0]["packet_count"] == 200);
        CHECK(j["reports"][0]["destinations"]["entries"].size() == 2);
        CHECK(j["accuracy"][0]["week"] == "w1");
        CHECK_FALSE(j["accuracy"][0].contains("destination_accuracy"));
        CHECK(j["accuracy"][0]["protocol_accuracy"] ==
              doctest::Approx(0.972522).epsilon(1e-12));
        // Round-trips through the serializer.
        CHECK(nlohmann::ordered_json::parse(j.dump()) == j);
    }
}

TEST_CASE("report heads match the weekly tallies on a constructed dataset") {
    // Reconstructs the week-1 headline numbers: one destination and one
    // protocol dominate.
    CaptureBatch batch;
    batch.label = "w1";
    std::int64_t no = 1;
    auto add = [&](const std::string& dest, const std::string& proto, int copies) {
        for (int i = 0; i < copies; ++i)
            batch.records.push_back(
                {no++, 0.0, "10.0.0.1", dest, proto, 100, ""});
    };
    add("172.21.206.143", "TCP", 50);
    add("172.21.206.143", "HTTP", 30);
    add("173.194.22.40", "TCP", 25);
    add("152.118.24.168", "DNS", 10);
    batch.source_files = {{"w1.csv", batch.records.size()}};
    Dataset d = from_capture(batch);
    TrafficReport report = traffic_report("w1", d, std::nullopt);
    REQUIRE_FALSE(report.destination_counts.entries.empty());
    CHECK(report.destination_counts.entries[0] == FrequencyEntry{"172.21.206.143", 80});
    CHECK(report.protocol_counts.entries[0] == FrequencyEntry{"TCP", 75});
}
