#pragma once

#include "treekit/data.hpp"

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

namespace treekit {

enum class NodeKind {
    MultiwaySplit,  // one child per declared value of a nominal attribute
    SubsetSplit,    // binary: value in subset -> child 0, else child 1
    ThresholdSplit, // binary: value <= threshold -> child 0, else child 1
    Leaf,
    EmptyLeaf, // no training instances reached this branch
};

struct TreeNode {
    NodeKind kind = NodeKind::EmptyLeaf;
    int attribute = -1;       // splits: schema attribute index
    double threshold = 0.0;   // ThresholdSplit
    std::vector<int> subset;  // SubsetSplit: sorted declared-value indices on the left
    std::vector<std::unique_ptr<TreeNode>> children;
    int label = -1;                       // Leaf: class index
    std::vector<long long> distribution;  // Leaf: training tally per class

    bool is_leaf() const { return kind == NodeKind::Leaf || kind == NodeKind::EmptyLeaf; }

    static std::unique_ptr<TreeNode> leaf(int label, std::vector<long long> distribution);
    static std::unique_ptr<TreeNode> empty_leaf();

    long long instance_count() const; // leaves: distribution total
};

using TreePtr = std::unique_ptr<TreeNode>;

TreePtr clone(const TreeNode& node);
std::size_t node_count(const TreeNode& node);
std::size_t leaf_count(const TreeNode& node); // Leaf and EmptyLeaf both count
std::size_t tree_depth(const TreeNode& node); // single node = 0

// Deep structural comparison (kinds, split parameters, labels, tallies).
bool structurally_equal(const TreeNode& a, const TreeNode& b);

// Walks every split and checks it against the schema: attribute indices in
// range, child counts matching the split kind, subsets proper and sorted,
// leaf labels and tally widths valid. Throws DomainError on the first defect.
void check_tree(const TreeNode& node, const Schema& schema);

// Indented one-node-per-line rendering.
std::string tree_to_text(const TreeNode& node, const Schema& schema);

// Stable JSON form: kind, attribute (name), threshold/subset (values),
// children, label, counts. Round-trips through tree_from_json.
nlohmann::json tree_to_json(const TreeNode& node, const Schema& schema);

// Validates against the schema; throws DomainError on malformed documents.
TreePtr tree_from_json(const nlohmann::json& doc, const Schema& schema);

} // namespace treekit
