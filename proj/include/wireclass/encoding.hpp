#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wireclass/dataset.hpp"
#include "wireclass/linalg.hpp"

// Turns a filtered Dataset into numeric training data: one-hot encoding
// for nominal features, min-max scaling for numeric ones, optional
// rare-value bucketing, and the WEKA-style percentage split.

namespace wireclass {

enum class FeatureRule { one_hot, min_max, passthrough };

struct FeatureEncoding {
    std::string attribute;
    FeatureRule rule = FeatureRule::passthrough;
    std::vector<std::string> values;  // one_hot dictionary (bucket label last, if any)
    double min = 0.0;                 // min_max observed range
    double max = 0.0;
    bool constant = false;  // min == max: the feature always encodes to 0

    Index width() const {
        return rule == FeatureRule::one_hot ? static_cast<Index>(values.size()) : 1;
    }

    bool operator==(const FeatureEncoding&) const = default;
};

struct RareBucket {
    std::size_t min_support = 0;  // values seen fewer times get bucketed
    std::string bucket_label = "__other__";

    bool operator==(const RareBucket&) const = default;
};

struct EncoderSpec {
    std::string class_attribute;
    std::vector<FeatureEncoding> features;
    std::optional<RareBucket> rare_bucket;
    std::vector<std::string> class_labels;  // fixed label order for the whole pipeline

    Index feature_dim() const;

    bool operator==(const EncoderSpec&) const = default;
};

struct EncodedDataset {
    FeatureMatrix features;  // N x D
    IntVector labels;        // N entries in [0, K)
    std::vector<std::string> label_names;
    EncoderSpec encoder;
    std::size_t clamp_count = 0;  // out-of-range numeric values clamped into [0,1]
};

struct FitOptions {
    std::optional<RareBucket> rare_bucket;
    bool scale_numeric = true;  // false: passthrough raw numeric values
};

// Learns the encoding from the data: one-hot dictionaries, min-max
// ranges, class label order, rare buckets. Collects human-readable
// warnings (constant features and the like) into `warnings` when given.
EncoderSpec fit_encoder(const Dataset& d, const std::string& class_attribute,
                        const FitOptions& options = {},
                        std::vector<std::string>* warnings = nullptr);

// Deterministic row-wise encoding. Unseen nominal values go to the rare
// bucket when one is configured and raise UnseenNominalError otherwise.
EncodedDataset encode(const Dataset& d, const EncoderSpec& spec);

// Feature-only encoding for prediction; the class attribute may be absent
// or hold missing values.
FeatureMatrix encode_features(const Dataset& d, const EncoderSpec& spec);

struct SplitSpec {
    double train_percent = 70.0;  // in (0, 100)
    bool shuffle = false;
    std::uint64_t seed = 1;
};

// Train size is round-half-up(N * percent / 100); the remainder tests.
// With shuffle, a seeded Fisher-Yates permutation is applied first, so
// identical seeds give identical partitions on every platform.
std::pair<EncodedDataset, EncodedDataset> percentage_split(const EncodedDataset& e,
                                                           const SplitSpec& spec);

// The train-row count the split will produce, exposed for reporting.
std::size_t split_train_count(std::size_t n, double train_percent);

}  // namespace wireclass
