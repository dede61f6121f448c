#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wireclass/errors.hpp"
#include "wireclass/linalg.hpp"

// WEKA-compatible evaluation: the confusion matrix plus the summary
// statistics WEKA prints (accuracy, Cohen's kappa, MAE/RMSE over
// per-instance probability slots, and the ZeroR-relative RAE/RRSE).

namespace wireclass {

struct ConfusionMatrix {
    std::vector<std::string> labels;  // fixed order; rows = actual, cols = predicted
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> counts;

    std::int64_t total() const { return counts.sum(); }
};

ConfusionMatrix confusion(const std::vector<int>& actual, const std::vector<int>& predicted,
                          std::vector<std::string> labels);

struct PerClassMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

struct EvalSummary {
    std::size_t n = 0;
    std::size_t correct = 0;
    std::size_t incorrect = 0;
    double accuracy = 0.0;
    double kappa = 0.0;
    bool kappa_degenerate = false;  // expected agreement hit 1
    double mae = 0.0;
    double rmse = 0.0;
    double rae = 0.0;   // fraction, 1.0 == 100 %
    double rrse = 0.0;  // fraction
    Vector train_priors;
    std::vector<PerClassMetrics> per_class;
};

// Error-slot sums for a soft predictor: each row of `probabilities` is a
// per-class distribution; the target is the 0/1 indicator of the actual
// class. Returns (sum |error|, sum error^2) over all n*K slots. This is
// the machinery behind MAE/RMSE/RAE/RRSE; hard 0/1 predictions reduce to
// closed forms that summarize() uses directly.
std::pair<double, double> soft_error_sums(const Eigen::MatrixXd& probabilities,
                                          const std::vector<int>& actual);

// train_priors must sum to 1 (1e-9); test_class_counts are the per-class
// actual counts of the evaluated set and must total the matrix sum.
EvalSummary summarize(const ConfusionMatrix& m, const Vector& train_priors,
                      const std::vector<std::int64_t>& test_class_counts);

struct RunInfo {
    std::string scheme;
    std::string relation;
    std::size_t instances = 0;
    std::vector<std::string> attributes;
    std::string test_mode;
};

struct Timings {
    std::optional<double> build_seconds;
    std::optional<double> test_seconds;
};

// WEKA-style text block: Run information (when given), Summary with the
// familiar column alignment, and the lettered confusion matrix.
std::string format_report(const EvalSummary& summary, const ConfusionMatrix& m,
                          const RunInfo* run_info = nullptr, const Timings* timings = nullptr);

// Machine-readable rendering; schema in docs/formats.md, stable key order.
nlohmann::ordered_json eval_to_json(const EvalSummary& summary, const ConfusionMatrix& m);

}  // namespace wireclass
