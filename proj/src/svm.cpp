#include "wireclass/svm.hpp"

#include <atomic>
#include <cassert>
#include <chrono>
#include <cmath>
#include <istream>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "wireclass/text.hpp"

namespace wireclass {

namespace {

constexpr double kQuadFloor = 1e-12;  // LibSVM's TAU guard for flat directions
constexpr double kInf = std::numeric_limits<double>::infinity();

// I_up(alpha): indices whose y*G can still decrease the objective upward.
inline bool in_i_up(double alpha, int y, double c) {
    return y > 0 ? alpha < c : alpha > 0.0;
}
inline bool in_i_low(double alpha, int y, double c) {
    return y > 0 ? alpha > 0.0 : alpha < c;
}

// -rho from the KKT conditions: the mean of y*G over free vectors, or the
// midpoint of the feasible interval when no vector is free.
double compute_rho(const Vector& alpha, const Vector& G, const IntVector& y, double c) {
    double upper = kInf, lower = -kInf, sum_free = 0.0;
    Index free_count = 0;
    for (Index t = 0; t < alpha.size(); ++t) {
        const double yg = y(t) * G(t);
        if (alpha(t) >= c) {
            if (y(t) < 0)
                upper = std::min(upper, yg);
            else
                lower = std::max(lower, yg);
        } else if (alpha(t) <= 0.0) {
            if (y(t) > 0)
                upper = std::min(upper, yg);
            else
                lower = std::max(lower, yg);
        } else {
            ++free_count;
            sum_free += yg;
        }
    }
    if (free_count > 0)
        return sum_free / static_cast<double>(free_count);
    return (upper + lower) / 2.0;
}

#ifndef NDEBUG
double dual_objective_min_form(const Vector& alpha, const Vector& G) {
    return 0.5 * (alpha.dot(G) - alpha.sum());
}
#endif

}  // namespace

SmoSolution smo_solve(const FeatureMatrix& X, const IntVector& y, const KernelSpec& resolved,
                      const TrainConfig& config) {
    const Index n = X.rows();
    if (n == 0)
        throw EmptyClassError("no training rows");
    if (y.size() != n)
        throw DimensionMismatchError("label vector length does not match row count");
    for (Index t = 0; t < n; ++t)
        if (y(t) != 1 && y(t) != -1)
            throw Error("binary solver expects labels +1/-1");

    const double c = config.c;
    const double eps = config.tolerance;
    KernelCache cache(X, resolved, config.cache_budget);

    Vector diag(n);
    for (Index t = 0; t < n; ++t)
        diag(t) = kernel_eval(resolved, X.row(t), X.row(t));

    Vector alpha = Vector::Zero(n);
    Vector G = Vector::Constant(n, -1.0);
    Vector yd = y.cast<double>();

    long iter = 0;
    bool converged = false;
#ifndef NDEBUG
    double prev_obj = 0.0;
#endif

    while (iter < config.max_iterations) {
        // First index: the most violating one in I_up.
        double g_max = -kInf;
        Index i = -1;
        for (Index t = 0; t < n; ++t) {
            if (!in_i_up(alpha(t), y(t), c))
                continue;
            const double v = -y(t) * G(t);
            if (v >= g_max) {
                g_max = v;
                i = t;
            }
        }
        if (i < 0) {
            converged = true;
            break;
        }
        const Vector& k_i = cache.row(i);

        // Second index over I_low: either the plain most-violating point
        // or the second-order pick that maximizes the objective decrease.
        double g_max2 = -kInf;
        Index j = -1;
        double best_obj = kInf;
        for (Index t = 0; t < n; ++t) {
            if (!in_i_low(alpha(t), y(t), c))
                continue;
            const double yg = y(t) * G(t);
            if (config.working_set == WorkingSetRule::max_violating_pair) {
                if (yg >= g_max2 && t != i) {
                    j = t;
                }
                g_max2 = std::max(g_max2, yg);
            } else {
                g_max2 = std::max(g_max2, yg);
                const double grad_diff = g_max + yg;
                if (grad_diff > 0.0) {
                    const double quad = std::max(diag(i) + diag(t) - 2.0 * k_i(t), kQuadFloor);
                    const double obj = -(grad_diff * grad_diff) / quad;
                    if (obj <= best_obj) {
                        best_obj = obj;
                        j = t;
                    }
                }
            }
        }
        if (g_max + g_max2 < eps || j < 0 || j == i) {
            converged = true;
            break;
        }

        const Vector& k_j = cache.row(j);
        const double quad = std::max(diag(i) + diag(j) - 2.0 * k_i(j), kQuadFloor);
        const double alpha_i_old = alpha(i);
        const double alpha_j_old = alpha(j);

        // Analytic two-variable step with box clipping (LibSVM update).
        if (y(i) != y(j)) {
            const double delta = (-G(i) - G(j)) / quad;
            const double diff = alpha(i) - alpha(j);
            alpha(i) += delta;
            alpha(j) += delta;
            if (diff > 0.0) {
                if (alpha(j) < 0.0) {
                    alpha(j) = 0.0;
                    alpha(i) = diff;
                }
                if (alpha(i) > c) {
                    alpha(i) = c;
                    alpha(j) = c - diff;
                }
            } else {
                if (alpha(i) < 0.0) {
                    alpha(i) = 0.0;
                    alpha(j) = -diff;
                }
                if (alpha(j) > c) {
                    alpha(j) = c;
                    alpha(i) = c + diff;
                }
            }
        } else {
            const double delta = (G(i) - G(j)) / quad;
            const double sum = alpha(i) + alpha(j);
            alpha(i) -= delta;
            alpha(j) += delta;
            if (sum > c) {
                if (alpha(i) > c) {
                    alpha(i) = c;
                    alpha(j) = sum - c;
                }
                if (alpha(j) > c) {
                    alpha(j) = c;
                    alpha(i) = sum - c;
                }
            } else {
                if (alpha(j) < 0.0) {
                    alpha(j) = 0.0;
                    alpha(i) = sum;
                }
                if (alpha(i) < 0.0) {
                    alpha(i) = 0.0;
                    alpha(j) = sum;
                }
            }
        }

        const double delta_i = alpha(i) - alpha_i_old;
        const double delta_j = alpha(j) - alpha_j_old;
        G.array() += yd.array() * (y(i) * delta_i * k_i.array() + y(j) * delta_j * k_j.array());
        ++iter;

#ifndef NDEBUG
        const double obj = dual_objective_min_form(alpha, G);
        assert(obj <= prev_obj + 1e-9 * std::max(1.0, std::abs(prev_obj)) &&
               "SMO dual objective must not regress");
        prev_obj = obj;
#endif
    }

    SmoSolution sol;
    sol.alpha = std::move(alpha);
    sol.iterations = iter;
    sol.converged = converged || iter < config.max_iterations;
    sol.bias = -compute_rho(sol.alpha, G, y, c);
    sol.objective = -(0.5 * (sol.alpha.dot(G) - sol.alpha.sum()));
    return sol;
}

SvmBinaryModel train_binary(const FeatureMatrix& positive, const FeatureMatrix& negative,
                            const TrainConfig& config) {
    if (positive.rows() == 0)
        throw EmptyClassError("positive class has no rows");
    if (negative.rows() == 0)
        throw EmptyClassError("negative class has no rows");
    if (positive.cols() != negative.cols())
        throw DimensionMismatchError("positive and negative rows have different dimensions");

    const Index np = positive.rows(), nn = negative.rows();
    FeatureMatrix X(np + nn, positive.cols());
    X.topRows(np) = positive;
    X.bottomRows(nn) = negative;
    IntVector y(np + nn);
    y.head(np).setConstant(1);
    y.tail(nn).setConstant(-1);

    const KernelSpec resolved = resolve_gamma(config.kernel, X.cols());
    SmoSolution sol = smo_solve(X, y, resolved, config);

    SvmBinaryModel model;
    model.kernel = resolved;
    model.bias = sol.bias;
    model.converged = sol.converged;
    model.iterations = sol.iterations;

    Index sv_count = 0;
    for (Index t = 0; t < sol.alpha.size(); ++t)
        if (sol.alpha(t) > 0.0)
            ++sv_count;
    model.support_vectors.resize(sv_count, X.cols());
    model.coefficients.resize(sv_count);
    Index out = 0;
    for (Index t = 0; t < sol.alpha.size(); ++t) {
        if (sol.alpha(t) > 0.0) {
            model.support_vectors.row(out) = X.row(t);
            model.coefficients(out) = sol.alpha(t) * y(t);
            ++out;
        }
    }
    return model;
}

SvmOvoModel train_ovo(const EncodedDataset& train, const TrainConfig& config) {
    const Index n = train.features.rows();
    const int label_count = static_cast<int>(train.label_names.size());
    if (n == 0)
        throw EmptyDatasetError();

    std::vector<std::vector<Index>> rows_by_label(static_cast<std::size_t>(label_count));
    for (Index r = 0; r < n; ++r) {
        const int label = train.labels(r);
        if (label < 0 || label >= label_count)
            throw Error("label index out of range at row " + std::to_string(r));
        rows_by_label[static_cast<std::size_t>(label)].push_back(r);
    }

    std::vector<int> present;
    for (int k = 0; k < label_count; ++k)
        if (!rows_by_label[static_cast<std::size_t>(k)].empty())
            present.push_back(k);
    if (present.size() < 2)
        throw SingleClassError();

    std::vector<std::pair<int, int>> pairs;
    for (std::size_t a = 0; a < present.size(); ++a)
        for (std::size_t b = a + 1; b < present.size(); ++b)
            pairs.emplace_back(present[a], present[b]);

    SvmOvoModel model;
    model.label_names = train.label_names;
    model.encoder = train.encoder;
    model.config = config;
    model.binaries.resize(pairs.size());
    model.pair_stats.resize(pairs.size());
    model.train_priors = Vector::Zero(label_count);
    for (int k = 0; k < label_count; ++k)
        model.train_priors(k) =
            static_cast<double>(rows_by_label[static_cast<std::size_t>(k)].size()) /
            static_cast<double>(n);

    auto gather = [&](int label) {
        const std::vector<Index>& rows = rows_by_label[static_cast<std::size_t>(label)];
        FeatureMatrix m(static_cast<Index>(rows.size()), train.features.cols());
        for (std::size_t r = 0; r < rows.size(); ++r)
            m.row(static_cast<Index>(r)) = train.features.row(rows[r]);
        return m;
    };

    const auto train_pair = [&](std::size_t p) {
        const auto [pos_label, neg_label] = pairs[p];
        const auto started = std::chrono::steady_clock::now();
        SvmBinaryModel binary = train_binary(gather(pos_label), gather(neg_label), config);
        binary.positive_label = pos_label;
        binary.negative_label = neg_label;
        PairTrainStats stats;
        stats.positive_label = pos_label;
        stats.negative_label = neg_label;
        stats.iterations = binary.iterations;
        stats.converged = binary.converged;
        stats.support_vector_count = static_cast<std::size_t>(binary.support_vectors.rows());
        stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                            .count();
        model.binaries[p] = std::move(binary);
        model.pair_stats[p] = std::move(stats);
    };

    const auto started = std::chrono::steady_clock::now();
    const int threads = std::max(1, std::min<int>(config.threads, static_cast<int>(pairs.size())));
    if (threads == 1) {
        for (std::size_t p = 0; p < pairs.size(); ++p)
            train_pair(p);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) {
            workers.emplace_back([&] {
                while (true) {
                    const std::size_t p = next.fetch_add(1);
                    if (p >= pairs.size())
                        return;
                    try {
                        train_pair(p);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!first_error)
                            first_error = std::current_exception();
                        return;
                    }
                }
            });
        }
        for (std::thread& w : workers)
            w.join();
        if (first_error)
            std::rethrow_exception(first_error);
    }
    model.train_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return model;
}

double decision_value(const SvmBinaryModel& model, const Eigen::Ref<const Vector>& x) {
    if (model.support_vectors.rows() == 0)
        return model.bias;
    return model.coefficients.dot(kernel_column(model.kernel, model.support_vectors, x)) +
           model.bias;
}

int predict(const SvmOvoModel& model, const Eigen::Ref<const Vector>& x) {
    std::vector<int> votes(model.label_names.size(), 0);
    for (const SvmBinaryModel& binary : model.binaries) {
        const double f = decision_value(binary, x);
        ++votes[static_cast<std::size_t>(f > 0.0 ? binary.positive_label
                                                 : binary.negative_label)];
    }
    std::size_t best = 0;
    for (std::size_t k = 1; k < votes.size(); ++k)
        if (votes[k] > votes[best])
            best = k;
    return static_cast<int>(best);
}

std::vector<int> predict_rows(const SvmOvoModel& model, const FeatureMatrix& rows) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(rows.rows()));
    for (Index r = 0; r < rows.rows(); ++r) {
        const Vector x = rows.row(r).transpose();
        out.push_back(predict(model, x));
    }
    return out;
}

std::vector<int> predict(const SvmOvoModel& model, const Dataset& d) {
    return predict_rows(model, encode_features(d, model.encoder));
}

// ---------------------------------------------------------------------------
// Persistence. The format is line oriented and fully documented in
// docs/formats.md; every double is written in shortest round-trip form so
// identical models serialize byte-identically.

namespace {

constexpr int kFormatVersion = 1;

void write_feature(const FeatureEncoding& f, std::ostream& out) {
    switch (f.rule) {
        case FeatureRule::one_hot:
            out << "onehot " << f.values.size() << ' ' << arff_quote(f.attribute) << '\n';
            for (const std::string& v : f.values)
                out << arff_quote(v) << '\n';
            break;
        case FeatureRule::min_max:
            out << "minmax " << (f.constant ? 1 : 0) << ' ' << double_to_string(f.min) << ' '
                << double_to_string(f.max) << ' ' << arff_quote(f.attribute) << '\n';
            break;
        case FeatureRule::passthrough:
            out << "passthrough " << arff_quote(f.attribute) << '\n';
            break;
    }
}

class ModelReader {
public:
    explicit ModelReader(std::istream& in) : in_(in) {}

    std::string next_line() {
        std::string line;
        if (!std::getline(in_, line))
            throw CorruptModelError(line_no_ + 1, "unexpected end of file");
        ++line_no_;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        return line;
    }

    // Splits the next line into whitespace-separated fields; the caller
    // checks counts and parses values.
    std::vector<std::string> next_fields() {
        std::istringstream ss(next_line());
        std::vector<std::string> fields;
        std::string f;
        while (ss >> f)
            fields.push_back(f);
        return fields;
    }

    std::size_t line_no() const { return line_no_; }

    [[noreturn]] void fail(const std::string& why) const {
        throw CorruptModelError(line_no_, why);
    }

private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

double require_double(const ModelReader& r, const std::string& text) {
    auto v = parse_double(text);
    if (!v)
        r.fail("bad number '" + text + "'");
    return *v;
}

long require_long(const ModelReader& r, const std::string& text) {
    auto v = parse_plain_integer(text);
    if (!v)
        r.fail("bad count '" + text + "'");
    return static_cast<long>(*v);
}

std::string unquote_or_fail(const ModelReader& r, std::string_view token) {
    try {
        return arff_unquote(trim(token));
    } catch (const Error& e) {
        r.fail(e.what());
    }
}

// Expects `line` to start with `keyword` followed by whitespace; returns
// the remainder.
std::string_view expect_keyword(const ModelReader& r, std::string_view line,
                                std::string_view keyword) {
    if (line.substr(0, keyword.size()) != keyword)
        r.fail("expected '" + std::string(keyword) + "'");
    return trim(line.substr(keyword.size()));
}

}  // namespace

void save_model(const SvmOvoModel& model, std::ostream& out) {
    out << "wireclass model " << kFormatVersion << '\n';
    const KernelSpec& k = model.config.kernel;
    // The per-binary kernels carry the resolved gamma; the config keeps the
    // requested one (possibly 0 = auto) for reproducing the run.
    out << "kernel " << kernel_name(k.kind) << " gamma " << double_to_string(k.gamma)
        << " degree " << k.degree << " coef0 " << double_to_string(k.coef0) << '\n';
    out << "c " << double_to_string(model.config.c) << '\n';
    out << "tolerance " << double_to_string(model.config.tolerance) << '\n';
    out << "split " << double_to_string(model.split.train_percent) << ' '
        << (model.split.shuffle ? 1 : 0) << ' ' << model.split.seed << '\n';
    out << "labels " << model.label_names.size() << '\n';
    for (const std::string& label : model.label_names)
        out << arff_quote(label) << '\n';
    out << "priors";
    for (Index i = 0; i < model.train_priors.size(); ++i)
        out << ' ' << double_to_string(model.train_priors(i));
    out << '\n';
    out << "encoder " << arff_quote(model.encoder.class_attribute) << '\n';
    if (model.encoder.rare_bucket)
        out << "rare " << model.encoder.rare_bucket->min_support << ' '
            << arff_quote(model.encoder.rare_bucket->bucket_label) << '\n';
    else
        out << "rare none\n";
    out << "features " << model.encoder.features.size() << '\n';
    for (const FeatureEncoding& f : model.encoder.features)
        write_feature(f, out);
    out << "binaries " << model.binaries.size() << '\n';
    for (const SvmBinaryModel& b : model.binaries) {
        out << "binary " << b.positive_label << ' ' << b.negative_label << " bias "
            << double_to_string(b.bias) << " gamma " << double_to_string(b.kernel.gamma)
            << " svs " << b.support_vectors.rows() << " dim " << b.support_vectors.cols()
            << " iterations " << b.iterations << " converged " << (b.converged ? 1 : 0) << '\n';
        for (Index r = 0; r < b.support_vectors.rows(); ++r) {
            out << double_to_string(b.coefficients(r));
            for (Index c = 0; c < b.support_vectors.cols(); ++c)
                out << ' ' << double_to_string(b.support_vectors(r, c));
            out << '\n';
        }
    }
    out << "end\n";
    if (!out)
        throw IoError("failed writing model");
}

std::string save_model_string(const SvmOvoModel& model) {
    std::ostringstream out;
    save_model(model, out);
    return out.str();
}

SvmOvoModel load_model(std::istream& in) {
    ModelReader r(in);

    {
        std::vector<std::string> header = r.next_fields();
        if (header.size() != 3 || header[0] != "wireclass" || header[1] != "model")
            r.fail("not a wireclass model file");
        if (header[2] != std::to_string(kFormatVersion))
            throw VersionMismatchError("unsupported model format version '" + header[2] + "'");
    }

    SvmOvoModel model;
    model.format_version = kFormatVersion;

    {
        std::vector<std::string> f = r.next_fields();
        if (f.size() != 8 || f[0] != "kernel" || f[2] != "gamma" || f[4] != "degree" ||
            f[6] != "coef0")
            r.fail("bad kernel line");
        model.config.kernel.kind = kernel_kind_from_name(f[1]);
        model.config.kernel.gamma = require_double(r, f[3]);
        model.config.kernel.degree = static_cast<int>(require_long(r, f[5]));
        model.config.kernel.coef0 = require_double(r, f[7]);
    }
    {
        std::vector<std::string> f = r.next_fields();
        if (f.size() != 2 || f[0] != "c")
            r.fail("bad c line");
        model.config.c = require_double(r, f[1]);
    }
    {
        std::vector<std::string> f = r.next_fields();
        if (f.size() != 2 || f[0] != "tolerance")
            r.fail("bad tolerance line");
        model.config.tolerance = require_double(r, f[1]);
    }
    {
        std::vector<std::string> f = r.next_fields();
        if (f.size() != 4 || f[0] != "split")
            r.fail("bad split line");
        model.split.train_percent = require_double(r, f[1]);
        model.split.shuffle = require_long(r, f[2]) != 0;
        model.split.seed = static_cast<std::uint64_t>(require_long(r, f[3]));
    }
    std::size_t label_count = 0;
    {
        std::vector<std::string> f = r.next_fields();
        if (f.size() != 2 || f[0] != "labels")
            r.fail("bad labels line");
        label_count = static_cast<std::size_t>(require_long(r, f[1]));
    }
    for (std::size_t i = 0; i < label_count; ++i)
        model.label_names.push_back(unquote_or_fail(r, r.next_line()));
    {
        std::istringstream ss(std::string(expect_keyword(r, r.next_line(), "priors")));
        model.train_priors.resize(static_cast<Index>(label_count));
        for (std::size_t i = 0; i < label_count; ++i) {
            std::string tok;
            if (!(ss >> tok))
                r.fail("priors line has too few entries");
            model.train_priors(static_cast<Index>(i)) = require_double(r, tok);
        }
    }
    model.encoder.class_attribute = unquote_or_fail(r, expect_keyword(r, r.next_line(), "encoder"));
    model.encoder.class_labels = model.label_names;
    {
        std::string line = r.next_line();
        std::string_view rest = expect_keyword(r, line, "rare");
        if (rest != "none") {
            std::size_t space = rest.find(' ');
            if (space == std::string_view::npos)
                r.fail("bad rare line");
            RareBucket bucket;
            bucket.min_support =
                static_cast<std::size_t>(require_long(r, std::string(rest.substr(0, space))));
            bucket.bucket_label = unquote_or_fail(r, rest.substr(space + 1));
            model.encoder.rare_bucket = bucket;
        }
    }
    std::size_t feature_count = 0;
    {
        std::vector<std::string> f = r.next_fields();
        if (f.size() != 2 || f[0] != "features")
            r.fail("bad features line");
        feature_count = static_cast<std::size_t>(require_long(r, f[1]));
    }
    for (std::size_t i = 0; i < feature_count; ++i) {
        std::string line = r.next_line();
        FeatureEncoding f;
        if (line.rfind("onehot ", 0) == 0) {
            std::string_view rest = trim(std::string_view(line).substr(7));
            std::size_t space = rest.find(' ');
            if (space == std::string_view::npos)
                r.fail("bad onehot line");
            f.rule = FeatureRule::one_hot;
            const long count = require_long(r, std::string(rest.substr(0, space)));
            f.attribute = unquote_or_fail(r, rest.substr(space + 1));
            for (long v = 0; v < count; ++v)
                f.values.push_back(unquote_or_fail(r, r.next_line()));
        } else if (line.rfind("minmax ", 0) == 0) {
            std::istringstream ss(line.substr(7));
            std::string constant, lo, hi;
            if (!(ss >> constant >> lo >> hi))
                r.fail("bad minmax line");
            std::string name;
            std::getline(ss, name);
            f.rule = FeatureRule::min_max;
            f.constant = require_long(r, constant) != 0;
            f.min = require_double(r, lo);
            f.max = require_double(r, hi);
            f.attribute = unquote_or_fail(r, trim(name));
        } else if (line.rfind("passthrough ", 0) == 0) {
            f.rule = FeatureRule::passthrough;
            f.attribute = unquote_or_fail(r, trim(std::string_view(line).substr(12)));
        } else {
            r.fail("unknown feature rule in '" + line + "'");
        }
        model.encoder.features.push_back(std::move(f));
    }
    std::size_t binary_count = 0;
    {
        std::vector<std::string> f = r.next_fields();
        if (f.size() != 2 || f[0] != "binaries")
            r.fail("bad binaries line");
        binary_count = static_cast<std::size_t>(require_long(r, f[1]));
    }
    for (std::size_t b = 0; b < binary_count; ++b) {
        std::vector<std::string> f = r.next_fields();
        if (f.size() != 15 || f[0] != "binary" || f[3] != "bias" || f[5] != "gamma" ||
            f[7] != "svs" || f[9] != "dim" || f[11] != "iterations" || f[13] != "converged")
            r.fail("bad binary header line");
        SvmBinaryModel binary;
        binary.positive_label = static_cast<int>(require_long(r, f[1]));
        binary.negative_label = static_cast<int>(require_long(r, f[2]));
        binary.bias = require_double(r, f[4]);
        binary.kernel = model.config.kernel;
        binary.kernel.gamma = require_double(r, f[6]);
        const long svs = require_long(r, f[8]);
        const long dim = require_long(r, f[10]);
        binary.iterations = require_long(r, f[12]);
        binary.converged = require_long(r, f[14]) != 0;
        binary.support_vectors.resize(svs, dim);
        binary.coefficients.resize(svs);
        for (long row = 0; row < svs; ++row) {
            std::istringstream ss(r.next_line());
            std::string tok;
            if (!(ss >> tok))
                r.fail("empty support-vector line");
            binary.coefficients(row) = require_double(r, tok);
            for (long col = 0; col < dim; ++col) {
                if (!(ss >> tok))
                    r.fail("support-vector line has too few values");
                binary.support_vectors(row, col) = require_double(r, tok);
            }
            if (ss >> tok)
                r.fail("support-vector line has too many values");
        }
        if (binary.positive_label < 0 ||
            binary.positive_label >= static_cast<int>(model.label_names.size()) ||
            binary.negative_label < 0 ||
            binary.negative_label >= static_cast<int>(model.label_names.size()))
            r.fail("binary class pair out of label range");
        model.binaries.push_back(std::move(binary));
    }
    if (r.next_line() != "end")
        r.fail("missing end marker");
    return model;
}

SvmOvoModel load_model_string(const std::string& text) {
    std::istringstream in(text);
    return load_model(in);
}

}  // namespace wireclass
