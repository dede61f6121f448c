#include "wireclass/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>

namespace wireclass {

Index EncoderSpec::feature_dim() const {
    Index dim = 0;
    for (const FeatureEncoding& f : features)
        dim += f.width();
    return dim;
}

namespace {

// Applies the rare-value rule to one dictionary: values below min_support
// are dropped and the bucket label is appended as a catch-all slot.
std::vector<std::string> bucketed_values(const Attribute& attr,
                                         const std::unordered_map<std::string, std::size_t>& counts,
                                         const std::optional<RareBucket>& bucket) {
    std::vector<std::string> out;
    for (const std::string& v : attr.values) {
        std::size_t support = 0;
        if (auto it = counts.find(v); it != counts.end())
            support = it->second;
        if (bucket && support < bucket->min_support)
            continue;
        out.push_back(v);
    }
    if (bucket) {
        if (std::find(out.begin(), out.end(), bucket->bucket_label) != out.end())
            throw Error("rare bucket label '" + bucket->bucket_label +
                        "' collides with an observed value of attribute '" + attr.name + "'");
        out.push_back(bucket->bucket_label);
    }
    return out;
}

std::unordered_map<std::string, std::size_t> value_counts(const Dataset& d, std::size_t attr) {
    std::unordered_map<std::string, std::size_t> counts;
    const Attribute& a = d.attributes[attr];
    for (const Instance& inst : d.instances) {
        const Cell& cell = inst[attr];
        if (cell.kind == Cell::Kind::nominal)
            ++counts[a.values[cell.index]];
    }
    return counts;
}

struct ResolvedFeature {
    std::size_t attr_index = 0;
    const FeatureEncoding* rule = nullptr;
    Index offset = 0;
    std::unordered_map<std::string, Index> value_index;  // one_hot lookup
};

// Binds the spec's feature rules to the dataset's attribute positions and
// verifies kinds match. Throws SchemaMismatchError on any disagreement.
std::vector<ResolvedFeature> resolve_features(const Dataset& d, const EncoderSpec& spec) {
    std::vector<ResolvedFeature> resolved;
    Index offset = 0;
    for (const FeatureEncoding& f : spec.features) {
        auto idx = d.attribute_index(f.attribute);
        if (!idx)
            throw SchemaMismatchError("attribute '" + f.attribute +
                                      "' required by the encoder is missing from the data");
        const Attribute& attr = d.attributes[*idx];
        if (f.rule == FeatureRule::one_hot && attr.kind != AttrKind::nominal)
            throw SchemaMismatchError("attribute '" + f.attribute + "' must be nominal");
        if (f.rule != FeatureRule::one_hot && attr.kind != AttrKind::numeric)
            throw SchemaMismatchError("attribute '" + f.attribute + "' must be numeric");
        ResolvedFeature r;
        r.attr_index = *idx;
        r.rule = &f;
        r.offset = offset;
        for (std::size_t v = 0; v < f.values.size(); ++v)
            r.value_index.emplace(f.values[v], static_cast<Index>(v));
        offset += f.width();
        resolved.push_back(std::move(r));
    }
    return resolved;
}

Index bucket_slot(const ResolvedFeature& r, const EncoderSpec& spec, const std::string& attribute,
                  const std::string& value) {
    if (!spec.rare_bucket)
        throw UnseenNominalError(attribute, value);
    return r.value_index.at(spec.rare_bucket->bucket_label);
}

FeatureMatrix encode_matrix(const Dataset& d, const EncoderSpec& spec, std::size_t* clamps) {
    std::vector<ResolvedFeature> resolved = resolve_features(d, spec);
    const Index n = static_cast<Index>(d.instances.size());
    FeatureMatrix features = FeatureMatrix::Zero(n, spec.feature_dim());
    for (Index row = 0; row < n; ++row) {
        const Instance& inst = d.instances[static_cast<std::size_t>(row)];
        for (const ResolvedFeature& r : resolved) {
            const Cell& cell = inst[r.attr_index];
            if (cell.is_missing())
                continue;  // all-zero one-hot block / 0.0 numeric
            const FeatureEncoding& f = *r.rule;
            switch (f.rule) {
                case FeatureRule::one_hot: {
                    const std::string& value =
                        d.attributes[r.attr_index].values[cell.index];
                    auto it = r.value_index.find(value);
                    Index slot = it != r.value_index.end()
                                     ? it->second
                                     : bucket_slot(r, spec, f.attribute, value);
                    features(row, r.offset + slot) = 1.0;
                    break;
                }
                case FeatureRule::min_max: {
                    if (f.constant)
                        break;  // constant feature encodes to 0
                    double scaled = (cell.number - f.min) / (f.max - f.min);
                    if (scaled < 0.0 || scaled > 1.0) {
                        scaled = std::clamp(scaled, 0.0, 1.0);
                        if (clamps)
                            ++*clamps;
                    }
                    features(row, r.offset) = scaled;
                    break;
                }
                case FeatureRule::passthrough:
                    features(row, r.offset) = cell.number;
                    break;
            }
        }
    }
    return features;
}

}  // namespace

EncoderSpec fit_encoder(const Dataset& d, const std::string& class_attribute,
                        const FitOptions& options, std::vector<std::string>* warnings) {
    if (d.instances.empty())
        throw EmptyDatasetError();
    auto class_idx = d.attribute_index(class_attribute);
    if (!class_idx)
        throw UnknownAttributeError("no attribute named '" + class_attribute + "'");
    if (d.attributes[*class_idx].kind != AttrKind::nominal)
        throw NotNominalClassError("class attribute '" + class_attribute + "' is not nominal");

    EncoderSpec spec;
    spec.class_attribute = class_attribute;
    spec.rare_bucket = options.rare_bucket;

    for (std::size_t a = 0; a < d.attributes.size(); ++a) {
        if (a == *class_idx)
            continue;
        const Attribute& attr = d.attributes[a];
        FeatureEncoding f;
        f.attribute = attr.name;
        switch (attr.kind) {
            case AttrKind::nominal:
                f.rule = FeatureRule::one_hot;
                f.values = bucketed_values(attr, value_counts(d, a), options.rare_bucket);
                break;
            case AttrKind::numeric: {
                bool any = false;
                double lo = 0.0, hi = 0.0;
                for (const Instance& inst : d.instances) {
                    const Cell& cell = inst[a];
                    if (cell.kind != Cell::Kind::number)
                        continue;
                    if (!any) {
                        lo = hi = cell.number;
                        any = true;
                    } else {
                        lo = std::min(lo, cell.number);
                        hi = std::max(hi, cell.number);
                    }
                }
                f.rule = options.scale_numeric ? FeatureRule::min_max : FeatureRule::passthrough;
                f.min = lo;
                f.max = hi;
                if (f.rule == FeatureRule::min_max && (!any || lo == hi)) {
                    f.constant = true;
                    if (warnings)
                        warnings->push_back("attribute '" + attr.name +
                                            "' has a constant observed range; it encodes to 0");
                }
                break;
            }
            case AttrKind::text:
                throw UnsupportedFeatureError("string attribute '" + attr.name +
                                              "' cannot be encoded; remove it before training");
        }
        spec.features.push_back(std::move(f));
    }

    spec.class_labels = bucketed_values(d.attributes[*class_idx], value_counts(d, *class_idx),
                                        options.rare_bucket);
    return spec;
}

EncodedDataset encode(const Dataset& d, const EncoderSpec& spec) {
    auto class_idx = d.attribute_index(spec.class_attribute);
    if (!class_idx)
        throw SchemaMismatchError("class attribute '" + spec.class_attribute +
                                  "' is missing from the data");
    if (d.attributes[*class_idx].kind != AttrKind::nominal)
        throw SchemaMismatchError("class attribute '" + spec.class_attribute + "' is not nominal");

    EncodedDataset out;
    out.encoder = spec;
    out.label_names = spec.class_labels;
    out.features = encode_matrix(d, spec, &out.clamp_count);

    std::unordered_map<std::string, int> label_index;
    for (std::size_t i = 0; i < spec.class_labels.size(); ++i)
        label_index.emplace(spec.class_labels[i], static_cast<int>(i));

    const Attribute& class_attr = d.attributes[*class_idx];
    out.labels.resize(out.features.rows());
    for (Index row = 0; row < out.features.rows(); ++row) {
        const Cell& cell = d.instances[static_cast<std::size_t>(row)][*class_idx];
        if (cell.is_missing())
            throw Error("missing class value at row " + std::to_string(row));
        const std::string& value = class_attr.values[cell.index];
        auto it = label_index.find(value);
        if (it == label_index.end()) {
            if (!spec.rare_bucket)
                throw UnseenNominalError(spec.class_attribute, value);
            out.labels(row) = label_index.at(spec.rare_bucket->bucket_label);
        } else {
            out.labels(row) = it->second;
        }
    }
    return out;
}

FeatureMatrix encode_features(const Dataset& d, const EncoderSpec& spec) {
    return encode_matrix(d, spec, nullptr);
}

std::size_t split_train_count(std::size_t n, double train_percent) {
    return static_cast<std::size_t>(
        std::floor(static_cast<double>(n) * train_percent / 100.0 + 0.5));
}

std::pair<EncodedDataset, EncodedDataset> percentage_split(const EncodedDataset& e,
                                                           const SplitSpec& spec) {
    const std::size_t n = static_cast<std::size_t>(e.features.rows());
    if (!(spec.train_percent > 0.0 && spec.train_percent < 100.0))
        throw DegenerateSplitError("train percentage must lie in (0, 100)");
    if (n < 2)
        throw DegenerateSplitError("need at least 2 instances to split");
    const std::size_t train_n = split_train_count(n, spec.train_percent);
    if (train_n == 0 || train_n >= n)
        throw DegenerateSplitError("split would leave an empty side (train " +
                                   std::to_string(train_n) + " of " + std::to_string(n) + ")");

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = i;
    if (spec.shuffle) {
        // Hand-rolled Fisher-Yates: std::shuffle is not guaranteed to be
        // reproducible across standard libraries.
        std::mt19937_64 rng(spec.seed);
        for (std::size_t i = n - 1; i > 0; --i) {
            std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
            std::swap(order[i], order[j]);
        }
    }

    auto take = [&](std::size_t begin, std::size_t count) {
        EncodedDataset part;
        part.encoder = e.encoder;
        part.label_names = e.label_names;
        part.features.resize(static_cast<Index>(count), e.features.cols());
        part.labels.resize(static_cast<Index>(count));
        for (std::size_t i = 0; i < count; ++i) {
            part.features.row(static_cast<Index>(i)) =
                e.features.row(static_cast<Index>(order[begin + i]));
            part.labels(static_cast<Index>(i)) = e.labels(static_cast<Index>(order[begin + i]));
        }
        return part;
    };
    return {take(0, train_n), take(train_n, n - train_n)};
}

}  // namespace wireclass
