#include "treekit/tree.hpp"

#include "text_util.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace treekit {

std::unique_ptr<TreeNode> TreeNode::leaf(int label, std::vector<long long> distribution) {
    auto node = std::make_unique<TreeNode>();
    node->kind = NodeKind::Leaf;
    node->label = label;
    node->distribution = std::move(distribution);
    return node;
}

std::unique_ptr<TreeNode> TreeNode::empty_leaf() {
    return std::make_unique<TreeNode>();
}

long long TreeNode::instance_count() const {
    if (is_leaf())
        return std::accumulate(distribution.begin(), distribution.end(), 0LL);
    long long n = 0;
    for (const auto& c : children) n += c->instance_count();
    return n;
}

TreePtr clone(const TreeNode& node) {
    auto copy = std::make_unique<TreeNode>();
    copy->kind = node.kind;
    copy->attribute = node.attribute;
    copy->threshold = node.threshold;
    copy->subset = node.subset;
    copy->label = node.label;
    copy->distribution = node.distribution;
    copy->children.reserve(node.children.size());
    for (const auto& c : node.children) copy->children.push_back(clone(*c));
    return copy;
}

std::size_t node_count(const TreeNode& node) {
    std::size_t n = 1;
    for (const auto& c : node.children) n += node_count(*c);
    return n;
}

std::size_t leaf_count(const TreeNode& node) {
    if (node.is_leaf()) return 1;
    std::size_t n = 0;
    for (const auto& c : node.children) n += leaf_count(*c);
    return n;
}

std::size_t tree_depth(const TreeNode& node) {
    std::size_t deepest = 0;
    for (const auto& c : node.children) deepest = std::max(deepest, 1 + tree_depth(*c));
    return deepest;
}

bool structurally_equal(const TreeNode& a, const TreeNode& b) {
    if (a.kind != b.kind || a.attribute != b.attribute || a.subset != b.subset ||
        a.label != b.label || a.distribution != b.distribution ||
        a.children.size() != b.children.size())
        return false;
    if (a.kind == NodeKind::ThresholdSplit && a.threshold != b.threshold) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!structurally_equal(*a.children[i], *b.children[i])) return false;
    return true;
}

namespace {

void check_node(const TreeNode& node, const Schema& schema) {
    const int num_attrs = static_cast<int>(schema.attributes.size());
    switch (node.kind) {
        case NodeKind::Leaf: {
            const int num_classes = static_cast<int>(schema.num_classes());
            if (node.label < 0 || node.label >= num_classes)
                throw DomainError("tree: leaf label index " + std::to_string(node.label) +
                                  " out of range");
            if (node.distribution.size() != schema.num_classes())
                throw DomainError("tree: leaf tally width does not match the class count");
            for (long long c : node.distribution)
                if (c < 0) throw DomainError("tree: negative count in leaf tally");
            if (!node.children.empty()) throw DomainError("tree: leaf with children");
            return;
        }
        case NodeKind::EmptyLeaf:
            if (!node.children.empty()) throw DomainError("tree: leaf with children");
            return;
        case NodeKind::MultiwaySplit: {
            if (node.attribute < 0 || node.attribute >= num_attrs)
                throw DomainError("tree: split attribute index out of range");
            const AttributeSpec& spec = schema.attributes[node.attribute];
            if (!spec.is_nominal())
                throw DomainError("tree: multiway split on numeric attribute '" + spec.name + "'");
            if (node.children.size() != spec.values.size())
                throw DomainError("tree: multiway split on '" + spec.name +
                                  "' needs one child per declared value");
            break;
        }
        case NodeKind::SubsetSplit: {
            if (node.attribute < 0 || node.attribute >= num_attrs)
                throw DomainError("tree: split attribute index out of range");
            const AttributeSpec& spec = schema.attributes[node.attribute];
            if (!spec.is_nominal())
                throw DomainError("tree: subset split on numeric attribute '" + spec.name + "'");
            if (node.children.size() != 2) throw DomainError("tree: subset split needs 2 children");
            if (node.subset.empty() || node.subset.size() >= spec.values.size())
                throw DomainError("tree: subset split on '" + spec.name +
                                  "' needs a proper non-empty subset");
            if (!std::is_sorted(node.subset.begin(), node.subset.end()))
                throw DomainError("tree: subset indices must be sorted");
            for (std::size_t i = 0; i < node.subset.size(); ++i) {
                if (node.subset[i] < 0 || node.subset[i] >= static_cast<int>(spec.values.size()))
                    throw DomainError("tree: subset value index out of range for '" + spec.name +
                                      "'");
                if (i && node.subset[i] == node.subset[i - 1])
                    throw DomainError("tree: duplicate value in subset split");
            }
            break;
        }
        case NodeKind::ThresholdSplit: {
            if (node.attribute < 0 || node.attribute >= num_attrs)
                throw DomainError("tree: split attribute index out of range");
            const AttributeSpec& spec = schema.attributes[node.attribute];
            if (spec.is_nominal())
                throw DomainError("tree: threshold split on nominal attribute '" + spec.name +
                                  "'");
            if (node.children.size() != 2)
                throw DomainError("tree: threshold split needs 2 children");
            break;
        }
    }
    if (node.attribute == static_cast<int>(schema.class_index))
        throw DomainError("tree: split on the class attribute");
    for (const auto& c : node.children) {
        if (!c) throw DomainError("tree: null child");
        check_node(*c, schema);
    }
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

std::string subset_text(const TreeNode& node, const AttributeSpec& spec) {
    std::string out = "{";
    for (std::size_t i = 0; i < node.subset.size(); ++i) {
        if (i) out += ", ";
        out += quoted(spec.values[node.subset[i]]);
    }
    return out + "}";
}

void render(const TreeNode& node, const Schema& schema, const std::string& indent,
            std::string& out) {
    if (node.kind == NodeKind::Leaf) {
        out += indent + "-> " + quoted(schema.class_attribute().values[node.label]) + " [";
        for (std::size_t i = 0; i < node.distribution.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(node.distribution[i]);
        }
        out += "]\n";
        return;
    }
    if (node.kind == NodeKind::EmptyLeaf) {
        out += indent + "-> (unclassified)\n";
        return;
    }
    const AttributeSpec& spec = schema.attributes[node.attribute];
    auto branch = [&](const std::string& test, const TreeNode& child) {
        out += indent + spec.name + " " + test + "\n";
        render(child, schema, indent + "|   ", out);
    };
    switch (node.kind) {
        case NodeKind::MultiwaySplit:
            for (std::size_t i = 0; i < node.children.size(); ++i)
                branch("= " + quoted(spec.values[i]), *node.children[i]);
            break;
        case NodeKind::SubsetSplit:
            branch("IN " + subset_text(node, spec), *node.children[0]);
            branch("NOT IN " + subset_text(node, spec), *node.children[1]);
            break;
        case NodeKind::ThresholdSplit:
            branch("<= " + detail::format_double(node.threshold), *node.children[0]);
            branch("> " + detail::format_double(node.threshold), *node.children[1]);
            break;
        default:
            break;
    }
}

const char* kind_name(NodeKind kind) {
    switch (kind) {
        case NodeKind::MultiwaySplit: return "multiway_split";
        case NodeKind::SubsetSplit: return "subset_split";
        case NodeKind::ThresholdSplit: return "threshold_split";
        case NodeKind::Leaf: return "leaf";
        case NodeKind::EmptyLeaf: return "empty_leaf";
    }
    return "?";
}

} // namespace

void check_tree(const TreeNode& node, const Schema& schema) { check_node(node, schema); }

std::string tree_to_text(const TreeNode& node, const Schema& schema) {
    check_tree(node, schema);
    std::string out;
    render(node, schema, "", out);
    return out;
}

nlohmann::json tree_to_json(const TreeNode& node, const Schema& schema) {
    nlohmann::json doc;
    doc["kind"] = kind_name(node.kind);
    switch (node.kind) {
        case NodeKind::Leaf:
            doc["label"] = schema.class_attribute().values[node.label];
            doc["counts"] = node.distribution;
            break;
        case NodeKind::EmptyLeaf:
            break;
        case NodeKind::SubsetSplit: {
            const AttributeSpec& spec = schema.attributes[node.attribute];
            doc["attribute"] = spec.name;
            std::vector<std::string> names;
            for (int v : node.subset) names.push_back(spec.values[v]);
            doc["subset"] = names;
            break;
        }
        case NodeKind::ThresholdSplit:
            doc["attribute"] = schema.attributes[node.attribute].name;
            doc["threshold"] = node.threshold;
            break;
        case NodeKind::MultiwaySplit:
            doc["attribute"] = schema.attributes[node.attribute].name;
            break;
    }
    if (!node.children.empty()) {
        nlohmann::json children = nlohmann::json::array();
        for (const auto& c : node.children) children.push_back(tree_to_json(*c, schema));
        doc["children"] = std::move(children);
    }
    return doc;
}

namespace {

TreePtr node_from_json(const nlohmann::json& doc, const Schema& schema) {
    if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
        throw DomainError("tree document: node without a 'kind' string");
    const std::string kind = doc["kind"].get<std::string>();
    auto node = std::make_unique<TreeNode>();

    auto attribute_of = [&]() -> int {
        if (!doc.contains("attribute") || !doc["attribute"].is_string())
            throw DomainError("tree document: split without an 'attribute' string");
        const std::string name = doc["attribute"].get<std::string>();
        auto idx = schema.attribute_index(name);
        if (!idx) throw DomainError("tree document: unknown attribute '" + name + "'");
        return static_cast<int>(*idx);
    };
    auto children_of = [&](std::size_t expected) {
        if (!doc.contains("children") || !doc["children"].is_array() ||
            doc["children"].size() != expected)
            throw DomainError("tree document: '" + kind + "' node needs " +
                              std::to_string(expected) + " children");
        for (const auto& c : doc["children"]) node->children.push_back(node_from_json(c, schema));
    };

    if (kind == "leaf") {
        node->kind = NodeKind::Leaf;
        if (!doc.contains("label") || !doc["label"].is_string())
            throw DomainError("tree document: leaf without a 'label' string");
        const std::string label = doc["label"].get<std::string>();
        auto idx = schema.class_attribute().value_index(label);
        if (!idx) throw DomainError("tree document: label '" + label + "' is not a class value");
        node->label = *idx;
        if (!doc.contains("counts") || !doc["counts"].is_array())
            throw DomainError("tree document: leaf without a 'counts' array");
        for (const auto& c : doc["counts"]) {
            if (!c.is_number_integer()) throw DomainError("tree document: non-integer count");
            node->distribution.push_back(c.get<long long>());
        }
    } else if (kind == "empty_leaf") {
        node->kind = NodeKind::EmptyLeaf;
    } else if (kind == "multiway_split") {
        node->kind = NodeKind::MultiwaySplit;
        node->attribute = attribute_of();
        const AttributeSpec& spec = schema.attributes[node->attribute];
        children_of(spec.values.size());
    } else if (kind == "subset_split") {
        node->kind = NodeKind::SubsetSplit;
        node->attribute = attribute_of();
        const AttributeSpec& spec = schema.attributes[node->attribute];
        if (!doc.contains("subset") || !doc["subset"].is_array())
            throw DomainError("tree document: subset split without a 'subset' array");
        for (const auto& v : doc["subset"]) {
            if (!v.is_string()) throw DomainError("tree document: non-string subset value");
            auto idx = spec.value_index(v.get<std::string>());
            if (!idx)
                throw DomainError("tree document: subset value '" + v.get<std::string>() +
                                  "' not declared for '" + spec.name + "'");
            node->subset.push_back(*idx);
        }
        std::sort(node->subset.begin(), node->subset.end());
        children_of(2);
    } else if (kind == "threshold_split") {
        node->kind = NodeKind::ThresholdSplit;
        node->attribute = attribute_of();
        if (!doc.contains("threshold") || !doc["threshold"].is_number())
            throw DomainError("tree document: threshold split without a numeric 'threshold'");
        node->threshold = doc["threshold"].get<double>();
        children_of(2);
    } else {
        throw DomainError("tree document: unknown node kind '" + kind + "'");
    }
    return node;
}

} // namespace

TreePtr tree_from_json(const nlohmann::json& doc, const Schema& schema) {
    TreePtr root = node_from_json(doc, schema);
    check_tree(*root, schema);
    return root;
}

} // namespace treekit
