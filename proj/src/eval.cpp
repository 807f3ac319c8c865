#include "treekit/eval.hpp"

#include "folds.hpp"
#include "text_util.hpp"

#include <chrono>
#include <cmath>
#include <numeric>

namespace treekit {

void seeded_shuffle(std::vector<int>& xs, std::mt19937_64& rng) {
    detail::seeded_shuffle(xs, rng);
}

FoldAssignment stratified_folds(const Dataset& data, int k, std::uint64_t seed) {
    auto violations = validate_dataset(data);
    if (!violations.empty())
        throw DomainError("stratified_folds: dataset failed validation: " +
                          violations.front().reason);
    std::vector<int> rows(data.size());
    std::iota(rows.begin(), rows.end(), 0);
    return {k, detail::stratified_fold_ids(data, rows, k, seed, /*canonical_order=*/false)};
}

long long ConfusionMatrix::classified_total() const {
    long long n = 0;
    for (const auto& row : cells) n += std::accumulate(row.begin(), row.end(), 0LL);
    return n;
}

long long ConfusionMatrix::unclassified_total() const {
    return std::accumulate(unclassified.begin(), unclassified.end(), 0LL);
}

ConfusionMatrix confusion_from_pairs(const std::vector<std::pair<int, Prediction>>& pairs,
                                     const std::vector<std::string>& labels) {
    const int c = static_cast<int>(labels.size());
    ConfusionMatrix m;
    m.labels = labels;
    m.cells.assign(c, std::vector<long long>(c, 0));
    m.unclassified.assign(c, 0);
    for (const auto& [actual, prediction] : pairs) {
        if (actual < 0 || actual >= c)
            throw DomainError("confusion_from_pairs: actual class index " +
                              std::to_string(actual) + " out of range");
        if (!prediction.classified()) {
            ++m.unclassified[actual];
            continue;
        }
        if (*prediction.label < 0 || *prediction.label >= c)
            throw DomainError("confusion_from_pairs: predicted class index " +
                              std::to_string(*prediction.label) + " out of range");
        ++m.cells[actual][*prediction.label];
    }
    return m;
}

std::vector<std::optional<double>> precision_per_class(const ConfusionMatrix& matrix) {
    const std::size_t c = matrix.labels.size();
    std::vector<std::optional<double>> out(c);
    for (std::size_t p = 0; p < c; ++p) {
        long long column = 0;
        for (std::size_t a = 0; a < c; ++a) column += matrix.cells[a][p];
        if (column == 0) continue; // never predicted: precision undefined
        const double pct = static_cast<double>(matrix.cells[p][p]) /
                           static_cast<double>(column) * 100.0;
        out[p] = std::round(pct * 10.0) / 10.0;
    }
    return out;
}

EvaluationReport cross_validate(Algorithm algorithm, const Dataset& data,
                                const LearnerParams& params, int k, std::uint64_t seed) {
    const FoldAssignment folds = stratified_folds(data, k, seed);

    LearnerParams fold_params = params;
    fold_params.seed = seed; // one seed drives folds and learner internals alike

    std::vector<std::pair<int, Prediction>> scored;
    scored.reserve(data.size());
    for (int f = 0; f < k; ++f) {
        Dataset train{data.schema, {}};
        std::vector<int> test;
        for (std::size_t i = 0; i < data.size(); ++i) {
            if (folds.fold_of[i] == f)
                test.push_back(static_cast<int>(i));
            else
                train.instances.push_back(data.instances[i]);
        }
        if (train.empty() || test.empty()) continue;
        const TreePtr tree = build_tree(algorithm, train, fold_params);
        for (int i : test)
            scored.emplace_back(data.class_of(i), classify(*tree, data.schema, data.instances[i]));
    }

    EvaluationReport report;
    report.algorithm = to_string(algorithm);
    report.matrix = confusion_from_pairs(scored, data.schema.class_attribute().values);
    for (std::size_t a = 0; a < report.matrix.labels.size(); ++a) {
        for (std::size_t p = 0; p < report.matrix.labels.size(); ++p) {
            if (a == p)
                report.correct += report.matrix.cells[a][p];
            else
                report.incorrect += report.matrix.cells[a][p];
        }
    }
    report.unclassified = report.matrix.unclassified_total();
    const double n = static_cast<double>(data.size());
    report.correct_pct = static_cast<double>(report.correct) / n * 100.0;
    report.incorrect_pct = static_cast<double>(report.incorrect) / n * 100.0;
    report.unclassified_pct = static_cast<double>(report.unclassified) / n * 100.0;
    report.precision = precision_per_class(report.matrix);

    const auto start = std::chrono::steady_clock::now();
    const TreePtr full = build_tree(algorithm, data, fold_params);
    const auto stop = std::chrono::steady_clock::now();
    (void)full;
    report.build_time_seconds = std::chrono::duration<double>(stop - start).count();
    report.k = k;
    report.seed = seed;
    return report;
}

std::string summary_csv_header() {
    return "algorithm,correct_pct,incorrect_pct,unclassified_pct,build_time_s,k,seed";
}

std::string summary_csv_row(const EvaluationReport& report) {
    return report.algorithm + "," + detail::format_double(report.correct_pct) + "," +
           detail::format_double(report.incorrect_pct) + "," +
           detail::format_double(report.unclassified_pct) + "," +
           detail::format_fixed(report.build_time_seconds, 3) + "," + std::to_string(report.k) +
           "," + std::to_string(report.seed);
}

} // namespace treekit
