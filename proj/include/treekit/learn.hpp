#pragma once

#include "treekit/data.hpp"
#include "treekit/tree.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace treekit {

enum class Algorithm { Id3, C45, Cart };

const char* to_string(Algorithm algorithm);
std::optional<Algorithm> algorithm_from_string(std::string_view name);

struct LearnerParams {
    int min_leaf = 2;                // C4.5 branch / CART node size floor
    double confidence_factor = 0.25; // pessimistic pruning
    int cc_folds = 5;                // cost-complexity internal CV
    std::uint64_t seed = 1;          // drives the internal CV fold assignment
    bool pruning = false;
};

struct Prediction {
    std::optional<int> label;          // class index; nullopt = unclassified
    std::vector<double> distribution;  // leaf tally normalized; empty if unclassified

    bool classified() const { return label.has_value(); }
};

// Training entry points. All three require a validation-clean, non-empty,
// all-present dataset (missing values raise UnsupportedMissingError) and at
// least one predictor. ID3 additionally rejects numeric attributes. Results
// are deterministic and do not depend on instance order.
TreePtr build_id3(const Dataset& data, const LearnerParams& params = {});
TreePtr build_c45(const Dataset& data, const LearnerParams& params = {});
TreePtr build_cart(const Dataset& data, const LearnerParams& params = {});
TreePtr build_tree(Algorithm algorithm, const Dataset& data, const LearnerParams& params = {});

// Pessimistic pruning (C4.5): bottom-up, a subtree collapses to a leaf when
// the leaf's error bound does not exceed the sum of its children's bounds.
TreePtr prune_pessimistic(const TreeNode& tree, const Dataset& training,
                          double confidence_factor);

// Upper confidence bound on the error *count* of a leaf that classified n
// instances with e mistakes: n times the largest error rate whose one-sided
// binomial tail still contains the observation at the given confidence.
double pessimistic_error_bound(long long n, long long e, double confidence_factor);

// Weakest-link alpha sequence of a grown tree: the strictly increasing
// complexity prices (in training error counts per saved leaf) at which the
// cost-complexity optimum changes. Empty for a tree with no splits.
std::vector<double> weakest_link_alphas(const TreeNode& tree, const Dataset& training);

// Collapses, bottom-up, every internal node whose local price g is strictly
// below alpha. alpha = 0 therefore returns the tree unchanged; any alpha
// beyond the sequence maximum yields the root leaf.
TreePtr prune_to_alpha(const TreeNode& tree, const Dataset& training, double alpha);

// Cost-complexity pruning (CART): candidate alphas from the weakest-link
// sequence, scored by internal stratified cc_folds-fold CV on the training
// data, final alpha chosen by the one-standard-error rule.
TreePtr prune_cost_complexity(const TreeNode& tree, const Dataset& training,
                              const LearnerParams& params);

// Routes one instance down the tree. EmptyLeaf yields an unclassified
// prediction; missing values raise UnsupportedMissingError.
Prediction classify(const TreeNode& tree, const Schema& schema, const Instance& instance);

} // namespace treekit
