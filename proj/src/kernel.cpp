#include "wireclass/kernel.hpp"

#include <algorithm>

namespace wireclass {

KernelSpec resolve_gamma(KernelSpec spec, Index dim) {
    if (spec.gamma == 0.0 && dim > 0)
        spec.gamma = 1.0 / static_cast<double>(dim);
    return spec;
}

const char* kernel_name(KernelKind kind) {
    switch (kind) {
        case KernelKind::linear: return "linear";
        case KernelKind::polynomial: return "polynomial";
        case KernelKind::rbf: return "rbf";
        case KernelKind::sigmoid: return "sigmoid";
    }
    return "unknown";
}

KernelKind kernel_kind_from_name(const std::string& name) {
    if (name == "linear" || name == "0")
        return KernelKind::linear;
    if (name == "polynomial" || name == "poly" || name == "1")
        return KernelKind::polynomial;
    if (name == "rbf" || name == "2")
        return KernelKind::rbf;
    if (name == "sigmoid" || name == "3")
        return KernelKind::sigmoid;
    throw Error("unknown kernel '" + name + "' (expected linear|polynomial|rbf|sigmoid)");
}

Vector kernel_column(const KernelSpec& spec, const FeatureMatrix& X,
                     const Eigen::Ref<const Vector>& x, const Vector* row_sqnorms) {
    if (X.cols() != x.size())
        throw DimensionMismatchError("kernel column: matrix has " + std::to_string(X.cols()) +
                                     " columns, vector has " + std::to_string(x.size()));
    Vector dots = X * x;
    switch (spec.kind) {
        case KernelKind::linear:
            return dots;
        case KernelKind::polynomial:
            return (spec.gamma * dots.array() + spec.coef0)
                .unaryExpr([d = spec.degree](double v) { return detail::powi(v, d); })
                .matrix();
        case KernelKind::rbf: {
            Vector sq = row_sqnorms ? *row_sqnorms : Vector(X.rowwise().squaredNorm());
            return ((sq.array() + x.squaredNorm() - 2.0 * dots.array()).max(0.0) * -spec.gamma)
                .exp()
                .matrix();
        }
        case KernelKind::sigmoid:
            return (spec.gamma * dots.array() + spec.coef0).tanh().matrix();
    }
    return dots;
}

Eigen::MatrixXd gram_matrix(const KernelSpec& spec, const FeatureMatrix& X) {
    const Index n = X.rows();
    Vector sqnorms = X.rowwise().squaredNorm();
    Eigen::MatrixXd gram(n, n);
    for (Index i = 0; i < n; ++i)
        gram.col(i) = kernel_column(spec, X, X.row(i).transpose(), &sqnorms);
    return gram;
}

KernelCache::KernelCache(const FeatureMatrix& X, const KernelSpec& resolved_spec,
                         std::size_t budget_entries)
    : X_(X), spec_(resolved_spec), sqnorms_(X.rowwise().squaredNorm()) {
    const std::size_t n = static_cast<std::size_t>(std::max<Index>(X.rows(), 1));
    max_rows_ = std::max<std::size_t>(2, budget_entries / n);
}

const Vector& KernelCache::row(Index i) {
    auto it = entries_.find(i);
    if (it != entries_.end()) {
        ++hits_;
        lru_.splice(lru_.begin(), lru_, it->second.lru_pos);
        return it->second.values;
    }
    ++misses_;
    while (entries_.size() >= max_rows_) {
        Index victim = lru_.back();
        lru_.pop_back();
        entries_.erase(victim);
    }
    lru_.push_front(i);
    Entry entry{kernel_column(spec_, X_, X_.row(i).transpose(), &sqnorms_), lru_.begin()};
    return entries_.emplace(i, std::move(entry)).first->second.values;
}

}  // namespace wireclass
