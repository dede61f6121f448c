#include "doctest.h"

#include <random>
#include <sstream>

#include "helpers.hpp"
#include "wireclass/svm.hpp"

using namespace wireclass;

namespace {

double smo_decision(const FeatureMatrix& X, const IntVector& y, const KernelSpec& kernel,
                    const SmoSolution& sol, const Eigen::Ref<const Vector>& x) {
    double f = sol.bias;
    for (Index j = 0; j < X.rows(); ++j)
        f += sol.alpha(j) * y(j) * kernel_eval(kernel, X.row(j).transpose(), x);
    return f;
}

}  // namespace

TEST_CASE("two symmetric points have the analytic solution") {
    FeatureMatrix pos(1, 1), neg(1, 1);
    pos << 1.0;
    neg << -1.0;
    TrainConfig config;
    config.kernel.kind = KernelKind::linear;
    config.c = 10.0;
    SvmBinaryModel model = train_binary(pos, neg, config);
    REQUIRE(model.support_vectors.rows() == 2);
    CHECK(model.coefficients(0) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(model.coefficients(1) == doctest::Approx(-0.5).epsilon(1e-9));
    CHECK(model.bias == doctest::Approx(0.0).epsilon(1e-9));
    Vector x(1);
    x << 0.7;
    CHECK(decision_value(model, x) == doctest::Approx(0.7).epsilon(1e-9));
    x << -2.0;
    CHECK(decision_value(model, x) == doctest::Approx(-2.0).epsilon(1e-9));
}

TEST_CASE("smo matches the brute-force QP oracle on tiny problems") {
    std::mt19937_64 rng(101);
    std::normal_distribution<double> dist(0.0, 1.0);
    std::uniform_int_distribution<Index> pick_n(2, 6);
    std::uniform_int_distribution<Index> pick_d(1, 3);
    std::uniform_int_distribution<int> pick_kernel(0, 1);
    const double cs[] = {0.1, 1.0, 10.0};
    int checked = 0;
    for (int trial = 0; checked < 60; ++trial) {
        const Index n = pick_n(rng);
        const Index d = pick_d(rng);
        FeatureMatrix X(n, d);
        for (Index r = 0; r < n; ++r)
            for (Index c = 0; c < d; ++c)
                X(r, c) = dist(rng);
        IntVector y(n);
        bool has_pos = false, has_neg = false;
        for (Index r = 0; r < n; ++r) {
            y(r) = (rng() & 1) ? 1 : -1;
            (y(r) > 0 ? has_pos : has_neg) = true;
        }
        if (!has_pos || !has_neg)
            continue;
        KernelSpec kernel;
        if (pick_kernel(rng) == 0) {
            kernel.kind = KernelKind::linear;
        } else {
            kernel.kind = KernelKind::rbf;
            kernel.gamma = 0.7;
        }
        TrainConfig config;
        config.kernel = kernel;
        config.c = cs[trial % 3];
        config.tolerance = 1e-10;
        config.max_iterations = 200000;

        SmoSolution sol = smo_solve(X, y, kernel, config);
        testhelp::QpSolution oracle = testhelp::solve_qp_bruteforce(X, y, kernel, config.c);
        REQUIRE(oracle.found);
        CHECK(std::abs(sol.objective - oracle.objective) <= 1e-6);
        for (Index r = 0; r < n; ++r) {
            const Vector x = X.row(r).transpose();
            const bool smo_sign = smo_decision(X, y, kernel, sol, x) > 0.0;
            const bool oracle_sign = testhelp::oracle_decision(X, y, kernel, oracle, x) > 0.0;
            CHECK(smo_sign == oracle_sign);
        }
        ++checked;
    }
    CHECK(checked == 60);
}

TEST_CASE("trained binaries satisfy dual feasibility and KKT") {
    std::mt19937_64 rng(303);
    std::normal_distribution<double> dist(0.0, 1.5);
    for (int trial = 0; trial < 20; ++trial) {
        const Index n = 30;
        FeatureMatrix X(n, 3);
        for (Index r = 0; r < n; ++r)
            for (Index c = 0; c < 3; ++c)
                X(r, c) = dist(rng);
        IntVector y(n);
        for (Index r = 0; r < n; ++r)
            y(r) = r % 2 == 0 ? 1 : -1;
        TrainConfig config;
        config.kernel.kind = KernelKind::rbf;
        config.kernel.gamma = 0.4;
        config.c = trial % 2 == 0 ? 1.0 : 10.0;
        SmoSolution sol = smo_solve(X, y, config.kernel, config);
        REQUIRE(sol.converged);

        double balance = 0.0;
        for (Index i = 0; i < n; ++i) {
            CHECK(sol.alpha(i) >= 0.0);
            CHECK(sol.alpha(i) <= config.c);
            balance += sol.alpha(i) * y(i);
        }
        CHECK(std::abs(balance) <= 1e-8);

        // Recompute the gradient independently and measure the violation.
        Eigen::MatrixXd gram = gram_matrix(config.kernel, X);
        Vector g(n);
        for (Index i = 0; i < n; ++i) {
            double acc = -1.0;
            for (Index j = 0; j < n; ++j)
                acc += sol.alpha(j) * y(i) * y(j) * gram(i, j);
            g(i) = acc;
        }
        double up = -std::numeric_limits<double>::infinity();
        double low = -std::numeric_limits<double>::infinity();
        for (Index i = 0; i < n; ++i) {
            const bool can_up = y(i) > 0 ? sol.alpha(i) < config.c : sol.alpha(i) > 0.0;
            const bool can_low = y(i) > 0 ? sol.alpha(i) > 0.0 : sol.alpha(i) < config.c;
            if (can_up)
                up = std::max(up, -y(i) * g(i));
            if (can_low)
                low = std::max(low, y(i) * g(i));
        }
        CHECK(up + low <= config.tolerance + 1e-9);
    }
}

TEST_CASE("separable data with large C satisfies the hard-margin property") {
    std::mt19937_64 rng(77);
    std::normal_distribution<double> noise(0.0, 0.3);
    const Index per_side = 25;
    FeatureMatrix pos(per_side, 2), neg(per_side, 2);
    for (Index i = 0; i < per_side; ++i) {
        pos(i, 0) = 3.0 + noise(rng);
        pos(i, 1) = noise(rng);
        neg(i, 0) = -3.0 + noise(rng);
        neg(i, 1) = noise(rng);
    }
    TrainConfig config;
    config.kernel.kind = KernelKind::linear;
    config.c = 1000.0;
    SvmBinaryModel model = train_binary(pos, neg, config);
    for (Index i = 0; i < per_side; ++i) {
        CHECK(decision_value(model, pos.row(i).transpose()) >= 1.0 - config.tolerance - 1e-6);
        CHECK(decision_value(model, neg.row(i).transpose()) <= -1.0 + config.tolerance + 1e-6);
    }
}

TEST_CASE("ovo trains one binary per class pair") {
    TrainConfig config;
    config.kernel.kind = KernelKind::rbf;
    SUBCASE("two classes give one model") {
        SvmOvoModel model = train_ovo(testhelp::blob_dataset(2, 8, 1), config);
        CHECK(model.binaries.size() == 1);
        CHECK(model.binaries[0].positive_label == 0);
        CHECK(model.binaries[0].negative_label == 1);
    }
    SUBCASE("fifteen classes give 105 models") {
        SvmOvoModel model = train_ovo(testhelp::blob_dataset(15, 4, 2), config);
        CHECK(model.binaries.size() == 105);
        // Pairs appear exactly once, in (i < j) lexicographic order.
        std::size_t at = 0;
        for (int i = 0; i < 15; ++i)
            for (int j = i + 1; j < 15; ++j, ++at) {
                CHECK(model.binaries[at].positive_label == i);
                CHECK(model.binaries[at].negative_label == j);
            }
    }
    SUBCASE("single class is rejected") {
        CHECK_THROWS_AS(train_ovo(testhelp::blob_dataset(1, 8, 3), config), SingleClassError);
    }
}

TEST_CASE("pairwise training only touches the pair's rows") {
    // Feature 0 equals the class id, so support vectors expose their origin.
    EncodedDataset e = testhelp::blob_dataset(3, 6, 4, 1.0);
    for (Index r = 0; r < e.features.rows(); ++r)
        e.features(r, 0) = static_cast<double>(e.labels(r));
    TrainConfig config;
    config.kernel.kind = KernelKind::linear;
    SvmOvoModel model = train_ovo(e, config);
    REQUIRE(model.binaries.size() == 3);
    for (const SvmBinaryModel& binary : model.binaries) {
        for (Index s = 0; s < binary.support_vectors.rows(); ++s) {
            const int origin = static_cast<int>(binary.support_vectors(s, 0));
            CHECK((origin == binary.positive_label || origin == binary.negative_label));
        }
    }
}

TEST_CASE("prediction respects orientation, unanimity, and tie-breaks") {
    SUBCASE("a crafted vote cycle resolves to the lowest label") {
        SvmOvoModel model;
        model.label_names = {"a", "b", "c"};
        auto crafted = [](int pos, int neg) {
            SvmBinaryModel b;
            b.kernel.kind = KernelKind::linear;
            b.bias = 1.0;  // no SVs: decision is always +1 -> votes pos
            b.positive_label = pos;
            b.negative_label = neg;
            return b;
        };
        model.binaries = {crafted(0, 1), crafted(2, 0), crafted(1, 2)};
        // votes: 0 beats 1, 2 beats 0, 1 beats 2 -> one vote each.
        Vector x(1);
        x << 0.0;
        CHECK(predict(model, x) == 0);
    }
    SUBCASE("unanimous binaries pick their class regardless of margins") {
        SvmOvoModel model;
        model.label_names = {"a", "b", "c"};
        auto crafted = [](int pos, int neg, double bias) {
            SvmBinaryModel b;
            b.kernel.kind = KernelKind::linear;
            b.bias = bias;
            b.positive_label = pos;
            b.negative_label = neg;
            return b;
        };
        // c wins both of its duels with tiny margins; a-b duel is huge.
        model.binaries = {crafted(0, 1, 1e6), crafted(0, 2, -1e-9), crafted(1, 2, -1e-9)};
        Vector x(1);
        x << 0.0;
        CHECK(predict(model, x) == 2);
    }
    SUBCASE("positive orientation is honored for the (0,1) pair") {
        SvmOvoModel model;
        model.label_names = {"a", "b"};
        SvmBinaryModel b;
        b.kernel.kind = KernelKind::linear;
        b.bias = 0.5;
        b.positive_label = 1;
        b.negative_label = 0;
        model.binaries = {b};
        Vector x(1);
        x << 0.0;
        CHECK(predict(model, x) == 1);
    }
}

TEST_CASE("scaling coefficients and biases by a positive constant keeps labels") {
    EncodedDataset e = testhelp::blob_dataset(4, 10, 9);
    TrainConfig config;
    config.kernel.kind = KernelKind::rbf;
    SvmOvoModel model = train_ovo(e, config);
    SvmOvoModel scaled = model;
    for (SvmBinaryModel& b : scaled.binaries) {
        b.coefficients *= 37.5;
        b.bias *= 37.5;
    }
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> dist(-5.0, 35.0);
    for (int i = 0; i < 200; ++i) {
        Vector x(2);
        x << dist(rng), dist(rng);
        CHECK(predict(model, x) == predict(scaled, x));
    }
}

TEST_CASE("training is deterministic and thread-count independent") {
    EncodedDataset e = testhelp::blob_dataset(5, 12, 21);
    TrainConfig config;
    config.kernel.kind = KernelKind::rbf;
    SvmOvoModel first = train_ovo(e, config);
    SvmOvoModel second = train_ovo(e, config);
    CHECK(save_model_string(first) == save_model_string(second));
    config.threads = 4;
    SvmOvoModel parallel = train_ovo(e, config);
    CHECK(save_model_string(first) == save_model_string(parallel));
}

TEST_CASE("cache budget does not change the trained model") {
    EncodedDataset e = testhelp::blob_dataset(3, 15, 33);
    TrainConfig config;
    config.kernel.kind = KernelKind::rbf;
    config.cache_budget = 0;
    const std::string small_cache = save_model_string(train_ovo(e, config));
    config.cache_budget = 1 << 22;
    const std::string big_cache = save_model_string(train_ovo(e, config));
    CHECK(small_cache == big_cache);
}

TEST_CASE("model persistence round-trips predictions exactly") {
    EncodedDataset e = testhelp::blob_dataset(4, 10, 55);
    TrainConfig config;
    config.kernel.kind = KernelKind::rbf;
    SvmOvoModel model = train_ovo(e, config);
    model.split.train_percent = 66.0;
    model.split.shuffle = true;
    model.split.seed = 7;
    const std::string saved = save_model_string(model);
    SvmOvoModel loaded = load_model_string(saved);
    CHECK(save_model_string(loaded) == saved);
    CHECK(loaded.label_names == model.label_names);
    CHECK(loaded.split.train_percent == 66.0);
    CHECK(loaded.split.shuffle);
    std::mt19937_64 rng(56);
    std::uniform_real_distribution<double> dist(-10.0, 40.0);
    for (int i = 0; i < 1000; ++i) {
        Vector x(2);
        x << dist(rng), dist(rng);
        CHECK(predict(model, x) == predict(loaded, x));
    }
}

TEST_CASE("persistence failure modes") {
    EncodedDataset e = testhelp::blob_dataset(2, 6, 77);
    TrainConfig config;
    config.kernel.kind = KernelKind::linear;
    SvmOvoModel model = train_ovo(e, config);
    const std::string saved = save_model_string(model);
    SUBCASE("truncation") {
        CHECK_THROWS_AS(load_model_string(saved.substr(0, saved.size() / 2)),
                        CorruptModelError);
    }
    SUBCASE("wrong version") {
        std::string bad = saved;
        bad.replace(bad.find("wireclass model 1"), 17, "wireclass model 9");
        CHECK_THROWS_AS(load_model_string(bad), VersionMismatchError);
    }
    SUBCASE("alien file") {
        CHECK_THROWS_AS(load_model_string("not a model\n"), CorruptModelError);
    }
}

TEST_CASE("iteration cap returns best-so-far with a warning flag") {
    EncodedDataset e = testhelp::blob_dataset(2, 20, 88, 0.4);  // overlapping blobs
    TrainConfig config;
    config.kernel.kind = KernelKind::rbf;
    config.max_iterations = 1;
    SvmOvoModel model = train_ovo(e, config);
    REQUIRE(model.binaries.size() == 1);
    CHECK_FALSE(model.binaries[0].converged);
    CHECK_FALSE(model.pair_stats[0].converged);
}

TEST_CASE("empty classes are rejected") {
    FeatureMatrix pos(1, 1), empty(0, 1);
    pos << 1.0;
    CHECK_THROWS_AS(train_binary(pos, empty, TrainConfig{}), EmptyClassError);
    CHECK_THROWS_AS(train_binary(empty, pos, TrainConfig{}), EmptyClassError);
}
