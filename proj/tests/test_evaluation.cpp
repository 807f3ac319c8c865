#include <doctest.h>

#include "treekit/data.hpp"
#include "treekit/eval.hpp"
#include "treekit/learn.hpp"
#include "treekit/tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

using namespace treekit;

namespace {

bool near(double a, double b, double tol = 1e-9) { return std::abs(a - b) < tol; }

} // namespace

TEST_CASE("the seeded shuffle is pinned") {
    std::vector<int> xs(10);
    std::iota(xs.begin(), xs.end(), 0);
    std::mt19937_64 rng(42);
    seeded_shuffle(xs, rng);
    CHECK(xs == std::vector<int>{1, 7, 9, 0, 3, 8, 4, 2, 5, 6});
}

TEST_CASE("stratified fold assignment is pinned for the embedded dataset") {
    const Dataset data = load_embedded_students();
    const FoldAssignment folds = stratified_folds(data, 10, 1);
    CHECK(folds.k == 10);
    const std::vector<int> expected = {2, 1, 3, 0, 9, 2, 6, 1, 7, 0, 4, 7, 6, 8, 3, 0,
                                       6, 7, 7, 4, 9, 3, 0, 9, 9, 7, 5, 4, 2, 5, 5, 1,
                                       5, 0, 8, 4, 6, 2, 2, 8, 3, 1, 3, 8, 1, 6, 5, 4};
    CHECK(folds.fold_of == expected);

    // fold sizes differ by at most one
    std::vector<int> sizes(10, 0);
    for (int f : folds.fold_of) ++sizes[f];
    const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    CHECK(*hi - *lo <= 1);
    CHECK(std::accumulate(sizes.begin(), sizes.end(), 0) == 48);

    // stratification: each class is spread so no fold holds two more of a
    // class than another fold does
    for (int c = 0; c < 4; ++c) {
        std::vector<int> per_fold(10, 0);
        for (std::size_t i = 0; i < data.size(); ++i)
            if (data.class_of(i) == c) ++per_fold[folds.fold_of[i]];
        const auto [clo, chi] = std::minmax_element(per_fold.begin(), per_fold.end());
        CHECK(*chi - *clo <= 1);
    }
}

TEST_CASE("fold assignment validates its inputs") {
    const Dataset data = load_embedded_students();
    CHECK_THROWS_AS((void)stratified_folds(data, 1, 1), DomainError);
    CHECK_THROWS_AS((void)stratified_folds(data, 49, 1), DomainError);
    CHECK_NOTHROW((void)stratified_folds(data, 48, 1));
    CHECK_NOTHROW((void)stratified_folds(data, 2, 1));
}

TEST_CASE("confusion matrices are assembled from labeled prediction pairs") {
    const std::vector<std::string> labels = {"A", "B"};
    std::vector<std::pair<int, Prediction>> pairs;
    pairs.push_back({0, Prediction{0, {1.0, 0.0}}});
    pairs.push_back({0, Prediction{1, {0.0, 1.0}}});
    pairs.push_back({1, Prediction{1, {0.0, 1.0}}});
    pairs.push_back({1, Prediction{std::nullopt, {}}});

    const ConfusionMatrix m = confusion_from_pairs(pairs, labels);
    CHECK(m.cells[0][0] == 1);
    CHECK(m.cells[0][1] == 1);
    CHECK(m.cells[1][0] == 0);
    CHECK(m.cells[1][1] == 1);
    CHECK(m.unclassified[0] == 0);
    CHECK(m.unclassified[1] == 1);
    CHECK(m.classified_total() == 3);
    CHECK(m.unclassified_total() == 1);

    std::vector<std::pair<int, Prediction>> bad;
    bad.push_back({2, Prediction{0, {1.0, 0.0}}});
    CHECK_THROWS_AS((void)confusion_from_pairs(bad, labels), DomainError);
    std::vector<std::pair<int, Prediction>> bad2;
    bad2.push_back({0, Prediction{5, {1.0, 0.0}}});
    CHECK_THROWS_AS((void)confusion_from_pairs(bad2, labels), DomainError);
}

TEST_CASE("per-class precision is the diagonal over its predicted column") {
    ConfusionMatrix m;
    m.labels = {"A", "B", "C"};
    m.cells = {{2, 1, 0}, {1, 0, 0}, {0, 1, 0}};
    m.unclassified = {0, 0, 0};
    const auto precision = precision_per_class(m);
    REQUIRE(precision.size() == 3);
    REQUIRE(precision[0].has_value());
    CHECK(near(*precision[0], 66.7)); // 2/3 rounded to one decimal
    REQUIRE(precision[1].has_value());
    CHECK(near(*precision[1], 0.0));
    CHECK_FALSE(precision[2].has_value()); // empty predicted column
}

TEST_CASE("cross-validation triples are pinned for seeds 1 to 3") {
    const Dataset data = load_embedded_students();
    LearnerParams off;
    LearnerParams on;
    on.pruning = true;

    struct Row {
        Algorithm algorithm;
        bool pruning;
        std::uint64_t seed;
        long long correct, incorrect, unclassified;
    };
    const Row expected[] = {
        {Algorithm::Id3, false, 1, 22, 18, 8},  {Algorithm::Id3, false, 2, 22, 19, 7},
        {Algorithm::Id3, false, 3, 23, 17, 8},  {Algorithm::Id3, true, 1, 22, 18, 8},
        {Algorithm::C45, false, 1, 20, 21, 7},  {Algorithm::C45, false, 2, 21, 24, 3},
        {Algorithm::C45, false, 3, 19, 24, 5},  {Algorithm::C45, true, 1, 18, 25, 5},
        {Algorithm::C45, true, 2, 21, 24, 3},   {Algorithm::C45, true, 3, 18, 26, 4},
        {Algorithm::Cart, false, 1, 29, 19, 0}, {Algorithm::Cart, false, 2, 26, 22, 0},
        {Algorithm::Cart, false, 3, 20, 28, 0}, {Algorithm::Cart, true, 1, 27, 21, 0},
        {Algorithm::Cart, true, 2, 20, 28, 0},  {Algorithm::Cart, true, 3, 17, 31, 0},
    };
    for (const Row& row : expected) {
        CAPTURE(to_string(row.algorithm));
        CAPTURE(row.pruning);
        CAPTURE(row.seed);
        const EvaluationReport r =
            cross_validate(row.algorithm, data, row.pruning ? on : off, 10, row.seed);
        CHECK(r.correct == row.correct);
        CHECK(r.incorrect == row.incorrect);
        CHECK(r.unclassified == row.unclassified);
        CHECK(r.correct + r.incorrect + r.unclassified == 48);
        CHECK(near(r.correct_pct, 100.0 * row.correct / 48.0));
        CHECK(r.k == 10);
        CHECK(r.seed == row.seed);
    }
}

TEST_CASE("seed-1 confusion matrices are pinned per algorithm") {
    const Dataset data = load_embedded_students();
    const LearnerParams params;

    struct Fixture {
        Algorithm algorithm;
        std::vector<std::vector<long long>> cells;
        std::vector<long long> unclassified;
        std::vector<double> precision;
    };
    const Fixture fixtures[] = {
        {Algorithm::Id3,
         {{11, 2, 0, 0}, {2, 4, 4, 0}, {0, 5, 4, 2}, {0, 2, 1, 3}},
         {1, 4, 2, 1},
         {84.6, 30.8, 44.4, 60.0}},
        {Algorithm::C45,
         {{9, 3, 1, 0}, {2, 4, 3, 1}, {0, 6, 5, 1}, {1, 1, 2, 2}},
         {1, 4, 1, 1},
         {75.0, 28.6, 45.5, 50.0}},
        {Algorithm::Cart,
         {{9, 5, 0, 0}, {3, 7, 4, 0}, {0, 6, 7, 0}, {0, 0, 1, 6}},
         {0, 0, 0, 0},
         {75.0, 38.9, 58.3, 100.0}},
    };
    for (const Fixture& f : fixtures) {
        CAPTURE(to_string(f.algorithm));
        const EvaluationReport r = cross_validate(f.algorithm, data, params, 10, 1);
        CHECK(r.matrix.cells == f.cells);
        CHECK(r.matrix.unclassified == f.unclassified);
        REQUIRE(r.precision.size() == 4);
        for (std::size_t c = 0; c < 4; ++c) {
            REQUIRE(r.precision[c].has_value());
            CHECK(near(*r.precision[c], f.precision[c]));
        }
    }
}

TEST_CASE("built trees do not depend on training row order") {
    // fold assignment is position-based by construction (the pinned vector
    // above), but the trees a training set produces must not care how its
    // rows happen to be ordered -- including the internally cross-validated
    // pruning, which sorts its fold input into a canonical order first
    const Dataset data = load_embedded_students();
    Dataset permuted = data;
    std::vector<int> order(data.size());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(7);
    seeded_shuffle(order, rng);
    for (std::size_t i = 0; i < order.size(); ++i)
        permuted.instances[i] = data.instances[order[i]];

    for (Algorithm a : {Algorithm::Id3, Algorithm::C45, Algorithm::Cart}) {
        for (bool pruning : {false, true}) {
            CAPTURE(to_string(a));
            CAPTURE(pruning);
            LearnerParams params;
            params.pruning = pruning;
            const TreePtr base = build_tree(a, data, params);
            const TreePtr moved = build_tree(a, permuted, params);
            CHECK(structurally_equal(*base, *moved));
        }
    }
}

TEST_CASE("summary CSV schema and formatting") {
    CHECK(summary_csv_header() == "algorithm,correct_pct,incorrect_pct,unclassified_pct,"
                                  "build_time_s,k,seed");
    EvaluationReport r;
    r.algorithm = "id3";
    r.correct_pct = 22.0 / 48.0 * 100.0;
    r.incorrect_pct = 37.5;
    r.unclassified_pct = 8.0 / 48.0 * 100.0;
    r.build_time_seconds = 0.1234;
    r.k = 10;
    r.seed = 1;
    CHECK(summary_csv_row(r) ==
          "id3,45.83333333333333,37.5,16.666666666666664,0.123,10,1");
}

TEST_CASE("cross-validation validates k") {
    const Dataset data = load_embedded_students();
    CHECK_THROWS_AS((void)cross_validate(Algorithm::Id3, data, {}, 1, 1), DomainError);
    CHECK_THROWS_AS((void)cross_validate(Algorithm::Id3, data, {}, 100, 1), DomainError);
}
