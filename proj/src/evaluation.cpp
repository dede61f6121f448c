#include "wireclass/evaluation.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "wireclass/text.hpp"

namespace wireclass {

ConfusionMatrix confusion(const std::vector<int>& actual, const std::vector<int>& predicted,
                          std::vector<std::string> labels) {
    if (actual.size() != predicted.size())
        throw LengthMismatchError("actual has " + std::to_string(actual.size()) +
                                  " entries, predicted has " + std::to_string(predicted.size()));
    ConfusionMatrix m;
    const int k = static_cast<int>(labels.size());
    m.labels = std::move(labels);
    m.counts.setZero(k, k);
    for (std::size_t i = 0; i < actual.size(); ++i) {
        const int a = actual[i];
        const int p = predicted[i];
        if (a < 0 || a >= k)
            throw UnknownLabelError("actual label index " + std::to_string(a) + " out of range");
        if (p < 0 || p >= k)
            throw UnknownLabelError("predicted label index " + std::to_string(p) +
                                    " out of range");
        ++m.counts(a, p);
    }
    return m;
}

std::pair<double, double> soft_error_sums(const Eigen::MatrixXd& probabilities,
                                          const std::vector<int>& actual) {
    if (static_cast<std::size_t>(probabilities.rows()) != actual.size())
        throw LengthMismatchError("probability rows do not match actual labels");
    double sum_abs = 0.0, sum_sq = 0.0;
    for (Index i = 0; i < probabilities.rows(); ++i) {
        for (Index j = 0; j < probabilities.cols(); ++j) {
            const double target = actual[static_cast<std::size_t>(i)] == static_cast<int>(j)
                                      ? 1.0
                                      : 0.0;
            const double e = probabilities(i, j) - target;
            sum_abs += std::abs(e);
            sum_sq += e * e;
        }
    }
    return {sum_abs, sum_sq};
}

EvalSummary summarize(const ConfusionMatrix& m, const Vector& train_priors,
                      const std::vector<std::int64_t>& test_class_counts) {
    const Index k = m.counts.rows();
    if (k == 0 || m.counts.sum() == 0)
        throw EmptyMatrixError();
    if (m.counts.cols() != k)
        throw Error("confusion matrix is not square");
    if (train_priors.size() != k || static_cast<Index>(test_class_counts.size()) != k)
        throw LengthMismatchError("priors/test counts do not match the matrix dimension");
    if (std::abs(train_priors.sum() - 1.0) > 1e-9)
        throw Error("train priors must sum to 1");
    std::int64_t counted = 0;
    for (std::int64_t c : test_class_counts) {
        if (c < 0)
            throw Error("negative test class count");
        counted += c;
    }
    if (counted != m.counts.sum())
        throw LengthMismatchError("test class counts do not total the matrix sum");

    EvalSummary s;
    const double n = static_cast<double>(m.counts.sum());
    s.n = static_cast<std::size_t>(m.counts.sum());
    s.correct = static_cast<std::size_t>(m.counts.diagonal().sum());
    s.incorrect = s.n - s.correct;
    s.accuracy = static_cast<double>(s.correct) / n;
    s.train_priors = train_priors;

    Eigen::VectorXd row_sums = m.counts.rowwise().sum().cast<double>();
    Eigen::VectorXd col_sums = m.counts.colwise().sum().transpose().cast<double>();
    const double expected = row_sums.dot(col_sums) / (n * n);
    if (1.0 - expected <= 1e-12) {
        s.kappa_degenerate = true;
        s.kappa = s.accuracy == 1.0 ? 1.0 : 0.0;
    } else {
        s.kappa = (s.accuracy - expected) / (1.0 - expected);
    }

    // Hard 0/1 predictions: each miss contributes |e| = 2 and e^2 = 2
    // across its K slots, so the slot means collapse to 2*errRate/K.
    const double slots = n * static_cast<double>(k);
    const double sum_abs = 2.0 * static_cast<double>(s.incorrect);
    const double sum_sq = 2.0 * static_cast<double>(s.incorrect);
    s.mae = sum_abs / slots;
    s.rmse = std::sqrt(sum_sq / slots);

    // ZeroR baseline: emit the training priors for every instance.
    const double priors_sq = train_priors.squaredNorm();
    double base_abs = 0.0, base_sq = 0.0;
    for (Index c = 0; c < k; ++c) {
        const double count = static_cast<double>(test_class_counts[static_cast<std::size_t>(c)]);
        const double p = train_priors(c);
        base_abs += count * 2.0 * (1.0 - p);
        base_sq += count * ((1.0 - p) * (1.0 - p) + (priors_sq - p * p));
    }
    const double inf = std::numeric_limits<double>::infinity();
    s.rae = base_abs > 0.0 ? sum_abs / base_abs : (sum_abs == 0.0 ? 0.0 : inf);
    s.rrse = base_sq > 0.0 ? std::sqrt(sum_sq / base_sq) : (sum_sq == 0.0 ? 0.0 : inf);

    s.per_class.resize(static_cast<std::size_t>(k));
    for (Index c = 0; c < k; ++c) {
        const double tp = static_cast<double>(m.counts(c, c));
        PerClassMetrics& pc = s.per_class[static_cast<std::size_t>(c)];
        pc.precision = col_sums(c) > 0.0 ? tp / col_sums(c) : 0.0;
        pc.recall = row_sums(c) > 0.0 ? tp / row_sums(c) : 0.0;
        pc.f1 = (pc.precision + pc.recall) > 0.0
                    ? 2.0 * pc.precision * pc.recall / (pc.precision + pc.recall)
                    : 0.0;
    }
    return s;
}

namespace {

std::string stat_line(const char* label, double value) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%-30s%11.4f", label, value);
    return buf;
}

std::string count_line(const char* label, std::size_t count, double percent) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%-30s%11zu%18.4f %%", label, count, percent);
    return buf;
}

std::string percent_line(const char* label, double percent) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%-30s%11.4f %%", label, percent);
    return buf;
}

}  // namespace

std::string format_report(const EvalSummary& summary, const ConfusionMatrix& m,
                          const RunInfo* run_info, const Timings* timings) {
    std::ostringstream out;
    if (run_info) {
        out << "=== Run information ===\n\n";
        out << "Scheme:       " << run_info->scheme << '\n';
        out << "Relation:     " << run_info->relation << '\n';
        out << "Instances:    " << run_info->instances << '\n';
        out << "Attributes:   " << run_info->attributes.size() << '\n';
        for (const std::string& a : run_info->attributes)
            out << "              " << a << '\n';
        out << "Test mode:    " << run_info->test_mode << "\n\n";
    }
    if (timings && timings->build_seconds)
        out << "Time taken to build model: " << *timings->build_seconds << " seconds\n\n";
    out << "=== Evaluation on test split ===\n\n";
    if (timings && timings->test_seconds)
        out << "Time taken to test model on test split: " << *timings->test_seconds
            << " seconds\n\n";
    out << "=== Summary ===\n\n";
    out << count_line("Correctly Classified Instances", summary.correct,
                      summary.accuracy * 100.0)
        << '\n';
    out << count_line("Incorrectly Classified Instances", summary.incorrect,
                      (1.0 - summary.accuracy) * 100.0)
        << '\n';
    out << stat_line("Kappa statistic", summary.kappa) << '\n';
    out << stat_line("Mean absolute error", summary.mae) << '\n';
    out << stat_line("Root mean squared error", summary.rmse) << '\n';
    out << percent_line("Relative absolute error", summary.rae * 100.0) << '\n';
    out << percent_line("Root relative squared error", summary.rrse * 100.0) << '\n';
    {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "%-30s%11zu", "Total Number of Instances", summary.n);
        out << buf << '\n';
    }
    out << "\n=== Confusion Matrix ===\n\n";
    const Index k = m.counts.rows();
    int width = 2;
    for (Index r = 0; r < k; ++r)
        for (Index c = 0; c < k; ++c)
            width = std::max(width,
                             static_cast<int>(std::to_string(m.counts(r, c)).size()));
    for (Index c = 0; c < k; ++c) {
        const std::string letters = column_letters(static_cast<std::size_t>(c));
        out << ' ' << std::string(static_cast<std::size_t>(width) > letters.size()
                                      ? static_cast<std::size_t>(width) - letters.size()
                                      : 0,
                                  ' ')
            << letters;
    }
    out << "   <-- classified as\n";
    for (Index r = 0; r < k; ++r) {
        for (Index c = 0; c < k; ++c) {
            const std::string v = std::to_string(m.counts(r, c));
            out << ' ' << std::string(static_cast<std::size_t>(width) - v.size(), ' ') << v;
        }
        out << " | " << column_letters(static_cast<std::size_t>(r)) << " = "
            << m.labels[static_cast<std::size_t>(r)] << '\n';
    }
    return out.str();
}

nlohmann::ordered_json eval_to_json(const EvalSummary& summary, const ConfusionMatrix& m) {
    nlohmann::ordered_json j;
    j["n"] = summary.n;
    j["correct"] = summary.correct;
    j["incorrect"] = summary.incorrect;
    j["accuracy"] = summary.accuracy;
    j["kappa"] = summary.kappa;
    j["kappa_degenerate"] = summary.kappa_degenerate;
    j["mean_absolute_error"] = summary.mae;
    j["root_mean_squared_error"] = summary.rmse;
    j["relative_absolute_error"] = summary.rae;
    j["root_relative_squared_error"] = summary.rrse;
    j["train_priors"] = std::vector<double>(summary.train_priors.data(),
                                            summary.train_priors.data() +
                                                summary.train_priors.size());
    nlohmann::ordered_json per_class = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < summary.per_class.size(); ++c) {
        nlohmann::ordered_json entry;
        entry["label"] = m.labels[c];
        entry["precision"] = summary.per_class[c].precision;
        entry["recall"] = summary.per_class[c].recall;
        entry["f1"] = summary.per_class[c].f1;
        per_class.push_back(std::move(entry));
    }
    j["per_class"] = std::move(per_class);
    nlohmann::ordered_json confusion_json;
    confusion_json["labels"] = m.labels;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (Index r = 0; r < m.counts.rows(); ++r) {
        std::vector<std::int64_t> row(static_cast<std::size_t>(m.counts.cols()));
        for (Index c = 0; c < m.counts.cols(); ++c)
            row[static_cast<std::size_t>(c)] = m.counts(r, c);
        rows.push_back(row);
    }
    confusion_json["counts"] = std::move(rows);
    j["confusion"] = std::move(confusion_json);
    return j;
}

}  // namespace wireclass
