#pragma once

#include <cmath>
#include <cstddef>
#include <list>
#include <string>
#include <unordered_map>

#include "wireclass/errors.hpp"
#include "wireclass/linalg.hpp"

// LibSVM's kernel family (-K 0..3): linear, polynomial, rbf, sigmoid.
// gamma == 0 means "auto": resolve_gamma turns it into 1/D before any
// evaluation.

namespace wireclass {

enum class KernelKind : int { linear = 0, polynomial = 1, rbf = 2, sigmoid = 3 };

struct KernelSpec {
    KernelKind kind = KernelKind::rbf;
    int degree = 3;
    double gamma = 0.0;  // 0 = auto (1/D)
    double coef0 = 0.0;

    bool operator==(const KernelSpec&) const = default;
};

KernelSpec resolve_gamma(KernelSpec spec, Index dim);

const char* kernel_name(KernelKind kind);
KernelKind kernel_kind_from_name(const std::string& name);

namespace detail {

// Integer power by repeated squaring, the way LibSVM evaluates the
// polynomial kernel.
inline double powi(double base, int times) {
    double tmp = base, ret = 1.0;
    for (int t = times; t > 0; t /= 2) {
        if (t % 2 == 1)
            ret *= tmp;
        tmp *= tmp;
    }
    return ret;
}

}  // namespace detail

// Single kernel evaluation over any two vector expressions. Expects a
// resolved spec (gamma > 0 or an explicitly chosen 0 for linear).
template <typename DerivedA, typename DerivedB>
double kernel_eval(const KernelSpec& spec, const Eigen::MatrixBase<DerivedA>& x,
                   const Eigen::MatrixBase<DerivedB>& z) {
    if (x.size() != z.size())
        throw DimensionMismatchError("kernel arguments have dimensions " +
                                     std::to_string(x.size()) + " and " +
                                     std::to_string(z.size()));
    switch (spec.kind) {
        case KernelKind::linear:
            return x.dot(z);
        case KernelKind::polynomial:
            return detail::powi(spec.gamma * x.dot(z) + spec.coef0, spec.degree);
        case KernelKind::rbf: {
            double sq = x.squaredNorm() + z.squaredNorm() - 2.0 * x.dot(z);
            return std::exp(-spec.gamma * std::max(sq, 0.0));
        }
        case KernelKind::sigmoid:
            return std::tanh(spec.gamma * x.dot(z) + spec.coef0);
    }
    return 0.0;
}

// K(X.row(i), x) for every row of X at once. row_sqnorms, when given,
// must hold X.rowwise().squaredNorm() (rbf fast path).
Vector kernel_column(const KernelSpec& spec, const FeatureMatrix& X,
                     const Eigen::Ref<const Vector>& x, const Vector* row_sqnorms = nullptr);

Eigen::MatrixXd gram_matrix(const KernelSpec& spec, const FeatureMatrix& X);

// Bounded LRU cache over kernel rows of one training matrix. The budget
// counts stored doubles; at least two rows are always retained so the
// solver can hold its working pair simultaneously. Any budget (including
// 0) yields identical values, only recomputation frequency changes.
class KernelCache {
public:
    KernelCache(const FeatureMatrix& X, const KernelSpec& resolved_spec,
                std::size_t budget_entries);

    const Vector& row(Index i);

    std::size_t hits() const { return hits_; }
    std::size_t misses() const { return misses_; }
    std::size_t rows_cached() const { return entries_.size(); }

private:
    struct Entry {
        Vector values;
        std::list<Index>::iterator lru_pos;
    };

    const FeatureMatrix& X_;
    KernelSpec spec_;
    Vector sqnorms_;
    std::size_t max_rows_;
    std::list<Index> lru_;  // front = most recently used
    std::unordered_map<Index, Entry> entries_;
    std::size_t hits_ = 0;
    std::size_t misses_ = 0;
};

}  // namespace wireclass
