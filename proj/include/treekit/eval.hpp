#pragma once

#include "treekit/data.hpp"
#include "treekit/learn.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace treekit {

// In-place Fisher-Yates with a modulo draw over mt19937_64 outputs. The exact
// draw sequence is part of the reproducibility contract (std::shuffle is
// implementation-defined and would not replay across toolchains).
void seeded_shuffle(std::vector<int>& xs, std::mt19937_64& rng);

struct FoldAssignment {
    int k = 0;
    std::vector<int> fold_of; // one fold id per instance
};

// Deterministic stratified assignment: per class in declared order, that
// class's instances are shuffled and dealt round-robin by a counter that runs
// on across classes. Fold sizes differ by at most one, overall and per class.
// Requires 2 <= k <= dataset size.
FoldAssignment stratified_folds(const Dataset& data, int k, std::uint64_t seed);

struct ConfusionMatrix {
    std::vector<std::string> labels;             // class values, declared order
    std::vector<std::vector<long long>> cells;   // [actual][predicted]
    std::vector<long long> unclassified;         // per actual class

    long long classified_total() const;
    long long unclassified_total() const;
};

// Tallies (actual class index, prediction) pairs. Out-of-range actuals or
// predicted labels are domain errors.
ConfusionMatrix confusion_from_pairs(const std::vector<std::pair<int, Prediction>>& pairs,
                                     const std::vector<std::string>& labels);

// Per-class precision (diagonal over column total) as a percent rounded to
// one decimal; nullopt for classes never predicted.
std::vector<std::optional<double>> precision_per_class(const ConfusionMatrix& matrix);

struct EvaluationReport {
    std::string algorithm;
    ConfusionMatrix matrix;
    long long correct = 0;
    long long incorrect = 0;
    long long unclassified = 0; // correct + incorrect + unclassified == dataset size
    double correct_pct = 0.0;
    double incorrect_pct = 0.0;
    double unclassified_pct = 0.0;
    std::vector<std::optional<double>> precision; // percent, 1 decimal
    double build_time_seconds = 0.0; // one full-data training pass, wall clock
    int k = 0;
    std::uint64_t seed = 0;
};

// Stratified k-fold cross-validation. Each instance is scored exactly once,
// by the tree trained on the other k-1 folds. The evaluation seed drives both
// the fold assignment and any seeded internals of the learner. Reproducible
// bit for bit for identical inputs.
EvaluationReport cross_validate(Algorithm algorithm, const Dataset& data,
                                const LearnerParams& params, int k, std::uint64_t seed);

// Summary CSV: one fixed header, one row per report.
std::string summary_csv_header();
std::string summary_csv_row(const EvaluationReport& report);

} // namespace treekit
