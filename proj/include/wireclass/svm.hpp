#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wireclass/encoding.hpp"
#include "wireclass/kernel.hpp"
#include "wireclass/linalg.hpp"

// Soft-margin C-SVC trained with SMO (maximal-violating-pair selection
// with a second-order tie-break, as in LibSVM), composed into a
// one-vs-one multiclass ensemble.

namespace wireclass {

enum class WorkingSetRule {
    second_order,        // WSS2: first index by violation, second by objective decrease
    max_violating_pair,  // plain maximal-violating-pair
};

struct TrainConfig {
    KernelSpec kernel;
    double c = 1.0;
    double tolerance = 1e-3;
    long max_iterations = 10'000'000;
    std::size_t cache_budget = 8'000'000;  // kernel-row doubles kept in memory
    std::uint64_t seed = 1;
    WorkingSetRule working_set = WorkingSetRule::second_order;
    int threads = 1;  // pairwise sub-problems trained concurrently
};

struct SvmBinaryModel {
    FeatureMatrix support_vectors;  // one row per retained training point
    Vector coefficients;            // alpha_i * y_i, |coef| <= C
    double bias = 0.0;
    KernelSpec kernel;       // gamma already resolved
    int positive_label = 1;  // label voted when the decision value is > 0
    int negative_label = 0;
    bool converged = true;
    long iterations = 0;
};

// Raw SMO solution, exposed for the oracle and feasibility tests.
struct SmoSolution {
    Vector alpha;
    double bias = 0.0;
    double objective = 0.0;  // dual objective, maximization form
    long iterations = 0;
    bool converged = true;
};

// Solves max \sum a_i - 1/2 \sum a_i a_j y_i y_j K(x_i, x_j)
// s.t. 0 <= a_i <= C, \sum a_i y_i = 0, to KKT tolerance.
SmoSolution smo_solve(const FeatureMatrix& X, const IntVector& y, const KernelSpec& resolved,
                      const TrainConfig& config);

struct PairTrainStats {
    int positive_label = 0;
    int negative_label = 0;
    long iterations = 0;
    double seconds = 0.0;
    std::size_t support_vector_count = 0;
    bool converged = true;
};

struct SvmOvoModel {
    int format_version = 1;
    std::vector<std::string> label_names;       // K class names, fixed order
    std::vector<SvmBinaryModel> binaries;       // pairs (i < j), lexicographic
    EncoderSpec encoder;
    TrainConfig config;
    SplitSpec split;      // how the training split was derived (replayed at evaluation)
    Vector train_priors;  // class frequencies of the training split, sums to 1

    // In-memory training metadata; never serialized (model files must be
    // byte-identical across runs).
    std::vector<PairTrainStats> pair_stats;
    double train_seconds = 0.0;
};

// Binary C-SVC over explicit positive/negative rows.
SvmBinaryModel train_binary(const FeatureMatrix& positive, const FeatureMatrix& negative,
                            const TrainConfig& config);

// One binary model per unordered pair of labels present in the data; each
// pair trains on that pair's rows only. Throws SingleClassError for K=1.
SvmOvoModel train_ovo(const EncodedDataset& train, const TrainConfig& config);

double decision_value(const SvmBinaryModel& model, const Eigen::Ref<const Vector>& x);

// Majority vote over all pairwise models; ties break toward the lowest
// label index. A decision value of exactly 0 votes the negative side.
int predict(const SvmOvoModel& model, const Eigen::Ref<const Vector>& x);
std::vector<int> predict_rows(const SvmOvoModel& model, const FeatureMatrix& rows);

// Encodes raw instances through the embedded encoder, then predicts.
std::vector<int> predict(const SvmOvoModel& model, const Dataset& d);

void save_model(const SvmOvoModel& model, std::ostream& out);
std::string save_model_string(const SvmOvoModel& model);
SvmOvoModel load_model(std::istream& in);
SvmOvoModel load_model_string(const std::string& text);

}  // namespace wireclass
