#pragma once

// Shared test fixtures: an exhaustive KKT-face QP oracle for checking the
// SMO solver, random dataset generators for round-trip properties, and a
// synthetic Wireshark-style capture with well-separated classes.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wireclass/dataset.hpp"
#include "wireclass/encoding.hpp"
#include "wireclass/kernel.hpp"
#include "wireclass/linalg.hpp"

namespace testhelp {

using wireclass::FeatureMatrix;
using wireclass::Index;
using wireclass::IntVector;
using wireclass::Vector;

struct QpSolution {
    Vector alpha;
    double objective = 0.0;  // max form: sum(alpha) - 1/2 alpha' Q alpha
    double bias = 0.0;
    bool found = false;
};

// Brute-force C-SVC dual oracle for tiny problems: enumerates every
// lower/upper/free pattern of the box constraints (3^n faces), solves the
// stationarity system on each face, keeps box-feasible candidates, and
// returns the best one. Completely independent of the SMO code path.
inline QpSolution solve_qp_bruteforce(const FeatureMatrix& X, const IntVector& y,
                                      const wireclass::KernelSpec& kernel, double c) {
    const Index n = X.rows();
    Eigen::MatrixXd k_matrix(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            k_matrix(i, j) = wireclass::kernel_eval(kernel, X.row(i), X.row(j));
    Eigen::MatrixXd q = k_matrix;
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            q(i, j) *= y(i) * y(j);

    const auto objective = [&](const Vector& alpha) {
        return alpha.sum() - 0.5 * alpha.dot(q * alpha);
    };

    QpSolution best;
    std::vector<int> pattern(static_cast<std::size_t>(n), 0);  // 0=lower, 1=upper, 2=free
    const long total = static_cast<long>(std::pow(3.0, static_cast<double>(n)));
    for (long code = 0; code < total; ++code) {
        long rest = code;
        for (Index i = 0; i < n; ++i) {
            pattern[static_cast<std::size_t>(i)] = static_cast<int>(rest % 3);
            rest /= 3;
        }
        std::vector<Index> free_idx;
        Vector alpha = Vector::Zero(n);
        for (Index i = 0; i < n; ++i) {
            if (pattern[static_cast<std::size_t>(i)] == 1)
                alpha(i) = c;
            else if (pattern[static_cast<std::size_t>(i)] == 2)
                free_idx.push_back(i);
        }
        const Index f = static_cast<Index>(free_idx.size());
        if (f == 0) {
            double balance = 0.0;
            for (Index i = 0; i < n; ++i)
                balance += y(i) * alpha(i);
            if (std::abs(balance) > 1e-9 * std::max(1.0, c))
                continue;
        } else {
            // Stationarity over the free block plus the equality constraint:
            // [Q_FF y_F; y_F' 0] [alpha_F; lambda] = [1 - Q_FB alpha_B; -y_B' alpha_B]
            Eigen::MatrixXd system = Eigen::MatrixXd::Zero(f + 1, f + 1);
            Eigen::VectorXd rhs(f + 1);
            for (Index a = 0; a < f; ++a) {
                for (Index b = 0; b < f; ++b)
                    system(a, b) = q(free_idx[static_cast<std::size_t>(a)],
                                     free_idx[static_cast<std::size_t>(b)]);
                system(a, f) = y(free_idx[static_cast<std::size_t>(a)]);
                system(f, a) = y(free_idx[static_cast<std::size_t>(a)]);
                double bound_term = 0.0;
                for (Index i = 0; i < n; ++i)
                    if (pattern[static_cast<std::size_t>(i)] == 1)
                        bound_term += q(free_idx[static_cast<std::size_t>(a)], i) * c;
                rhs(a) = 1.0 - bound_term;
            }
            double bound_balance = 0.0;
            for (Index i = 0; i < n; ++i)
                if (pattern[static_cast<std::size_t>(i)] == 1)
                    bound_balance += y(i) * c;
            rhs(f) = -bound_balance;

            Eigen::VectorXd solution =
                system.completeOrthogonalDecomposition().solve(rhs);
            if ((system * solution - rhs).norm() > 1e-7 * std::max(1.0, rhs.norm()))
                continue;  // inconsistent face
            bool feasible = true;
            for (Index a = 0; a < f; ++a) {
                const double v = solution(a);
                if (v < -1e-8 || v > c + 1e-8) {
                    feasible = false;
                    break;
                }
                alpha(free_idx[static_cast<std::size_t>(a)]) = std::clamp(v, 0.0, c);
            }
            if (!feasible)
                continue;
        }
        const double obj = objective(alpha);
        if (!best.found || obj > best.objective) {
            best.found = true;
            best.objective = obj;
            best.alpha = alpha;
        }
    }

    if (best.found) {
        // Bias from the margin condition on free vectors, midpoint of the
        // feasible interval otherwise (recomputed here, not via the solver).
        Vector f0 = Vector::Zero(n);
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j)
                f0(i) += best.alpha(j) * y(j) * k_matrix(j, i);
        double sum = 0.0;
        int count = 0;
        double hi = std::numeric_limits<double>::infinity();
        double lo = -hi;
        for (Index i = 0; i < n; ++i) {
            const double margin_bias = y(i) - f0(i);
            if (best.alpha(i) > 1e-9 && best.alpha(i) < c - 1e-9) {
                sum += margin_bias;
                ++count;
            } else if (best.alpha(i) <= 1e-9) {
                // y_i f(x_i) >= 1 required
                if (y(i) > 0)
                    lo = std::max(lo, margin_bias);
                else
                    hi = std::min(hi, margin_bias);
            } else {
                // y_i f(x_i) <= 1 required
                if (y(i) > 0)
                    hi = std::min(hi, margin_bias);
                else
                    lo = std::max(lo, margin_bias);
            }
        }
        best.bias = count > 0 ? sum / count : (hi + lo) / 2.0;
    }
    return best;
}

inline double oracle_decision(const FeatureMatrix& X, const IntVector& y,
                              const wireclass::KernelSpec& kernel, const QpSolution& sol,
                              const Eigen::Ref<const Vector>& x) {
    double f = sol.bias;
    for (Index j = 0; j < X.rows(); ++j)
        f += sol.alpha(j) * y(j) * wireclass::kernel_eval(kernel, X.row(j).transpose(), x);
    return f;
}

// --- random data -----------------------------------------------------------

inline std::string random_token(std::mt19937_64& rng) {
    static const std::string plain = "abcdefgXYZ0123456789._-";
    static const std::string tricky = " ,'\"{}%?\\\t\n";
    std::uniform_int_distribution<int> length(0, 10);
    std::uniform_int_distribution<int> pick_plain(0, static_cast<int>(plain.size()) - 1);
    std::uniform_int_distribution<int> pick_tricky(0, static_cast<int>(tricky.size()) - 1);
    std::uniform_int_distribution<int> coin(0, 9);
    const int len = length(rng);
    std::string out;
    for (int i = 0; i < len; ++i) {
        if (coin(rng) == 0)
            out.push_back(tricky[static_cast<std::size_t>(pick_tricky(rng))]);
        else
            out.push_back(plain[static_cast<std::size_t>(pick_plain(rng))]);
    }
    return out;
}

// Random dataset over the supported ARFF subset: numeric, nominal and
// string attributes, missing cells, adversarial value text.
inline wireclass::Dataset random_dataset(std::mt19937_64& rng) {
    using namespace wireclass;
    std::uniform_int_distribution<int> attr_count(1, 5);
    std::uniform_int_distribution<int> row_count(0, 12);
    std::uniform_int_distribution<int> kind_pick(0, 2);
    std::uniform_int_distribution<int> nominal_size(1, 4);
    std::uniform_real_distribution<double> value(-1e6, 1e6);
    std::uniform_int_distribution<int> miss(0, 9);

    Dataset d;
    d.relation = random_token(rng);
    if (d.relation.empty())
        d.relation = "r";
    const int attrs = attr_count(rng);
    for (int a = 0; a < attrs; ++a) {
        const std::string name = "attr" + std::to_string(a) + random_token(rng);
        switch (kind_pick(rng)) {
            case 0:
                d.attributes.push_back(Attribute::numeric(name));
                break;
            case 1: {
                std::vector<std::string> values;
                const int k = nominal_size(rng);
                for (int v = 0; v < k; ++v) {
                    std::string candidate;
                    do {
                        candidate = "v" + std::to_string(v) + random_token(rng);
                    } while (std::find(values.begin(), values.end(), candidate) != values.end());
                    values.push_back(candidate);
                }
                d.attributes.push_back(Attribute::nominal(name, std::move(values)));
                break;
            }
            default:
                d.attributes.push_back(Attribute::text(name));
                break;
        }
    }
    const int rows = row_count(rng);
    for (int rix = 0; rix < rows; ++rix) {
        Instance inst;
        for (const Attribute& attr : d.attributes) {
            if (miss(rng) == 0) {
                inst.push_back(Cell::missing());
                continue;
            }
            switch (attr.kind) {
                case AttrKind::numeric:
                    inst.push_back(Cell::num(value(rng)));
                    break;
                case AttrKind::nominal: {
                    std::uniform_int_distribution<std::size_t> pick(0, attr.values.size() - 1);
                    inst.push_back(Cell::nom(pick(rng)));
                    break;
                }
                case AttrKind::text:
                    inst.push_back(Cell::str(random_token(rng)));
                    break;
            }
        }
        d.instances.push_back(std::move(inst));
    }
    return d;
}

// --- encoded blob fixture ----------------------------------------------------

// K well-separated 2-D Gaussian blobs as an already-encoded dataset.
inline wireclass::EncodedDataset blob_dataset(int classes, int per_class, unsigned seed,
                                              double spread = 8.0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, 0.5);
    wireclass::EncodedDataset e;
    e.features.resize(classes * per_class, 2);
    e.labels.resize(classes * per_class);
    for (int k = 0; k < classes; ++k) {
        e.label_names.push_back("class" + std::to_string(k));
        for (int i = 0; i < per_class; ++i) {
            const Index row = k * per_class + i;
            e.features(row, 0) = spread * k + noise(rng);
            e.features(row, 1) = noise(rng);
            e.labels(row) = k;
        }
    }
    e.encoder.class_attribute = "Class";
    e.encoder.class_labels = e.label_names;
    wireclass::FeatureEncoding f0;
    f0.attribute = "x0";
    f0.rule = wireclass::FeatureRule::passthrough;
    wireclass::FeatureEncoding f1;
    f1.attribute = "x1";
    f1.rule = wireclass::FeatureRule::passthrough;
    e.encoder.features = {f0, f1};
    return e;
}

// --- published protocol-task confusion matrix -------------------------------

// 15-class confusion matrix of the week-1 protocol classification run
// (n = 39959, 38861 on the diagonal); used as the metric oracle fixture.
inline std::pair<std::vector<std::string>, Eigen::Matrix<std::int64_t, 15, 15>>
protocol_confusion_fixture() {
    std::vector<std::string> labels = {"HTTP",  "TCP",     "DNS",    "ARP",  "TLSv1.2",
                                       "ICMPv6", "ICMPv3",  "DHCP",   "DHCPv6", "LLNMR",
                                       "QOSP",   "TLSv1.1", "NEWS",   "HTTP/HTML", "NTP"};
    Eigen::Matrix<std::int64_t, 15, 15> m;
    m.setZero();
    const std::int64_t rows[15][15] = {
        {891, 456, 7, 0, 43, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
        {289, 37321, 5, 0, 65, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 25, 108, 0, 22, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 214, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {51, 74, 7, 0, 327, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 12, 0, 0, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 9, 0, 0, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {1, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {1, 1, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 5, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    };
    for (int r = 0; r < 15; ++r)
        for (int c = 0; c < 15; ++c)
            m(r, c) = rows[r][c];
    return {labels, m};
}

// --- synthetic capture -----------------------------------------------------

struct SyntheticCaptureSpec {
    int rows = 3000;
    unsigned seed = 42;
    // Length means far apart relative to sigma so the classes separate.
    std::vector<std::string> protocols = {"TCP", "HTTP", "DNS"};
    std::vector<double> length_means = {120.0, 700.0, 1300.0};
    double length_sigma = 20.0;
};

inline std::string synthetic_capture_csv(const SyntheticCaptureSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<std::size_t> pick_class(0, spec.protocols.size() - 1);
    std::uniform_int_distribution<int> pick_dest(0, 7);
    std::normal_distribution<double> noise(0.0, spec.length_sigma);
    std::ostringstream out;
    out << "\"No.\",\"Time\",\"Source\",\"Destination\",\"Protocol\",\"Length\",\"Info\"\n";
    for (int i = 0; i < spec.rows; ++i) {
        const std::size_t k = pick_class(rng);
        long length = std::lround(spec.length_means[k] + noise(rng));
        length = std::max(42L, std::min(1514L, length));
        out << (i + 1) << ',' << (0.001 * i) << ",10.0.0.1,172.21.61."
            << pick_dest(rng) << ',' << spec.protocols[k] << ',' << length << ",\"synthetic row "
            << i << "\"\n";
    }
    return out.str();
}

}  // namespace testhelp
