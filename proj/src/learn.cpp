#include "treekit/learn.hpp"

#include "folds.hpp"
#include "treekit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace treekit {

const char* to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::Id3: return "id3";
        case Algorithm::C45: return "c45";
        case Algorithm::Cart: return "cart";
    }
    return "?";
}

std::optional<Algorithm> algorithm_from_string(std::string_view name) {
    if (name == "id3") return Algorithm::Id3;
    if (name == "c45") return Algorithm::C45;
    if (name == "cart") return Algorithm::Cart;
    return std::nullopt;
}

namespace {

using Rows = std::vector<int>;
using detail::stratified_fold_ids;

Rows all_rows(const Dataset& data) {
    Rows rows(data.size());
    std::iota(rows.begin(), rows.end(), 0);
    return rows;
}

void check_training_input(const Dataset& data, bool nominal_only) {
    const std::size_t width = data.schema.attributes.size();
    for (std::size_t i = 0; i < data.size(); ++i) {
        const Instance& inst = data.instances[i];
        for (std::size_t a = 0; a < std::min(width, inst.size()); ++a)
            if (inst[a].is_missing())
                throw UnsupportedMissingError(
                    "missing value in attribute '" + data.schema.attributes[a].name +
                    "', instance " + std::to_string(i) + "; missing values are not supported");
    }
    auto violations = validate_dataset(data);
    if (!violations.empty())
        throw DomainError("training data failed validation: " + violations.front().reason);
    if (data.empty()) throw DomainError("training data is empty");
    if (nominal_only)
        for (std::size_t a = 0; a < width; ++a)
            if (a != data.schema.class_index && !data.schema.attributes[a].is_nominal())
                throw UnsupportedAttributeError("attribute '" + data.schema.attributes[a].name +
                                                "' is numeric; this learner handles nominal "
                                                "attributes only");
}

TreePtr majority_leaf(const ClassCounts& cc) {
    return TreeNode::leaf(cc.majority(), cc.counts);
}

// --- split search helpers -------------------------------------------------

double subset_entropy(const Dataset& data, const Rows& rows) {
    return entropy(class_counts(data, rows));
}

// Class tallies per declared value of nominal attribute `a`, over `rows`.
std::vector<ClassCounts> value_tallies(const Dataset& data, const Rows& rows, int a) {
    std::vector<ClassCounts> out(data.schema.attributes[a].values.size(),
                                 ClassCounts{std::vector<long long>(data.schema.num_classes(), 0)});
    for (int i : rows)
        ++out[data.instances[i][a].nominal_index()].counts[data.class_of(i)];
    return out;
}

double weighted_entropy(const std::vector<ClassCounts>& branches, double n) {
    double h = 0.0;
    for (const ClassCounts& b : branches) {
        const double size = static_cast<double>(b.total());
        if (size > 0) h += size / n * entropy(b);
    }
    return h;
}

// Distinct observed values of numeric attribute `a`, ascending.
std::vector<double> observed_numeric(const Dataset& data, const Rows& rows, int a) {
    std::vector<double> xs;
    xs.reserve(rows.size());
    for (int i : rows) xs.push_back(data.instances[i][a].numeric_value());
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

ClassCounts tally_pair(const Dataset& data, const Rows& rows, int a, double threshold,
                       ClassCounts& right) {
    ClassCounts left{std::vector<long long>(data.schema.num_classes(), 0)};
    right.counts.assign(data.schema.num_classes(), 0);
    for (int i : rows) {
        const bool le = data.instances[i][a].numeric_value() <= threshold;
        ++(le ? left : right).counts[data.class_of(i)];
    }
    return left;
}

// --- ID3 --------------------------------------------------------------------

TreePtr id3_node(const Dataset& data, const Rows& rows, std::vector<bool>& used) {
    const ClassCounts cc = class_counts(data, rows);
    bool any_available = false;
    for (std::size_t a = 0; a < used.size(); ++a)
        if (a != data.schema.class_index && !used[a]) any_available = true;
    if (cc.pure() || !any_available) return majority_leaf(cc);

    const double h = entropy(cc);
    const double n = static_cast<double>(rows.size());
    double best_gain = -1.0;
    int best_attr = -1;
    for (std::size_t a = 0; a < used.size(); ++a) {
        if (a == data.schema.class_index || used[a]) continue;
        const double gain = h - weighted_entropy(value_tallies(data, rows, static_cast<int>(a)), n);
        if (gain > best_gain + kSplitTolerance) {
            best_gain = gain;
            best_attr = static_cast<int>(a);
        }
    }
    if (best_gain <= kSplitTolerance) return majority_leaf(cc);

    auto node = std::make_unique<TreeNode>();
    node->kind = NodeKind::MultiwaySplit;
    node->attribute = best_attr;
    const std::size_t num_values = data.schema.attributes[best_attr].values.size();
    std::vector<Rows> parts(num_values);
    for (int i : rows) parts[data.instances[i][best_attr].nominal_index()].push_back(i);
    used[best_attr] = true;
    for (const Rows& part : parts) {
        if (part.empty())
            node->children.push_back(TreeNode::empty_leaf());
        else
            node->children.push_back(id3_node(data, part, used));
    }
    used[best_attr] = false;
    return node;
}

// --- C4.5 ---------------------------------------------------------------------

struct C45Candidate {
    double ratio = -1.0;
    int attribute = -1;
    bool numeric = false;
    double threshold = 0.0;
};

TreePtr c45_node(const Dataset& data, const Rows& rows, std::vector<bool>& used, int min_leaf) {
    const ClassCounts cc = class_counts(data, rows);
    bool any_available = false;
    for (std::size_t a = 0; a < used.size(); ++a)
        if (a != data.schema.class_index && !used[a]) any_available = true;
    if (static_cast<int>(rows.size()) < min_leaf || cc.pure() || !any_available)
        return majority_leaf(cc);

    const double h = subset_entropy(data, rows);
    const double n = static_cast<double>(rows.size());
    C45Candidate best;
    for (std::size_t a = 0; a < used.size(); ++a) {
        if (a == data.schema.class_index || used[a]) continue;
        const int attr = static_cast<int>(a);
        if (data.schema.attributes[a].is_nominal()) {
            const auto branches = value_tallies(data, rows, attr);
            const double gain = h - weighted_entropy(branches, n);
            ClassCounts sizes{{}};
            for (const ClassCounts& b : branches) sizes.counts.push_back(b.total());
            const double si = entropy(sizes);
            if (si <= kSplitTolerance || gain <= kSplitTolerance) continue;
            const double ratio = gain / si;
            if (ratio > best.ratio + kSplitTolerance) best = {ratio, attr, false, 0.0};
        } else {
            // candidate cuts sit at each observed value except the largest;
            // instances with value <= cut go left
            const auto xs = observed_numeric(data, rows, attr);
            for (std::size_t t = 0; t + 1 < xs.size(); ++t) {
                ClassCounts right{{}};
                const ClassCounts left = tally_pair(data, rows, attr, xs[t], right);
                const double gain =
                    h - weighted_entropy({left, right}, n);
                ClassCounts sizes{{left.total(), right.total()}};
                const double si = entropy(sizes);
                if (si <= kSplitTolerance || gain <= kSplitTolerance) continue;
                const double ratio = gain / si;
                if (ratio > best.ratio + kSplitTolerance) best = {ratio, attr, true, xs[t]};
            }
        }
    }
    if (best.attribute < 0) return majority_leaf(cc);

    auto node = std::make_unique<TreeNode>();
    node->attribute = best.attribute;
    std::vector<Rows> parts;
    if (best.numeric) {
        node->kind = NodeKind::ThresholdSplit;
        node->threshold = best.threshold;
        parts.resize(2);
        for (int i : rows)
            parts[data.instances[i][best.attribute].numeric_value() <= best.threshold ? 0 : 1]
                .push_back(i);
    } else {
        node->kind = NodeKind::MultiwaySplit;
        parts.resize(data.schema.attributes[best.attribute].values.size());
        for (int i : rows) parts[data.instances[i][best.attribute].nominal_index()].push_back(i);
        used[best.attribute] = true; // numeric attributes may be reused deeper
    }
    for (const Rows& part : parts) {
        if (part.empty()) {
            node->children.push_back(TreeNode::empty_leaf());
        } else if (static_cast<int>(part.size()) < min_leaf) {
            node->children.push_back(majority_leaf(class_counts(data, part)));
        } else {
            node->children.push_back(c45_node(data, part, used, min_leaf));
        }
    }
    if (!best.numeric) used[best.attribute] = false;
    return node;
}

// --- CART ---------------------------------------------------------------------

struct CartCandidate {
    double decrease = -1.0;
    int attribute = -1;
    bool numeric = false;
    double threshold = 0.0;
    std::vector<int> subset; // declared-value indices, ascending
};

TreePtr cart_node(const Dataset& data, const Rows& rows, int min_leaf) {
    const ClassCounts cc = class_counts(data, rows);
    if (cc.pure() || static_cast<int>(rows.size()) < 2 * min_leaf) return majority_leaf(cc);

    const double parent = gini(cc);
    const double n = static_cast<double>(rows.size());
    const std::size_t num_classes = data.schema.num_classes();
    CartCandidate best;
    bool have_best = false;

    for (std::size_t a = 0; a < data.schema.attributes.size(); ++a) {
        if (a == data.schema.class_index) continue;
        const int attr = static_cast<int>(a);
        if (data.schema.attributes[a].is_nominal()) {
            const auto tallies = value_tallies(data, rows, attr);
            std::vector<int> observed; // declared-value indices with instances
            for (std::size_t v = 0; v < tallies.size(); ++v)
                if (tallies[v].total() > 0) observed.push_back(static_cast<int>(v));
            if (observed.size() < 2) continue;
            for (const auto& pick : canonical_subsets(static_cast<int>(observed.size()))) {
                ClassCounts left{std::vector<long long>(num_classes, 0)};
                std::vector<int> left_values;
                for (int o : pick) {
                    left_values.push_back(observed[o]);
                    for (std::size_t c = 0; c < num_classes; ++c)
                        left.counts[c] += tallies[observed[o]].counts[c];
                }
                ClassCounts right{std::vector<long long>(num_classes, 0)};
                for (std::size_t c = 0; c < num_classes; ++c)
                    right.counts[c] = cc.counts[c] - left.counts[c];
                const double dec = parent -
                                   static_cast<double>(left.total()) / n * gini(left) -
                                   static_cast<double>(right.total()) / n * gini(right);
                if (!have_best || dec > best.decrease + kSplitTolerance) {
                    best = {dec, attr, false, 0.0, left_values};
                    have_best = true;
                }
            }
        } else {
            const auto xs = observed_numeric(data, rows, attr);
            for (std::size_t t = 0; t + 1 < xs.size(); ++t) {
                ClassCounts right{{}};
                const ClassCounts left = tally_pair(data, rows, attr, xs[t], right);
                const double dec = parent -
                                   static_cast<double>(left.total()) / n * gini(left) -
                                   static_cast<double>(right.total()) / n * gini(right);
                if (!have_best || dec > best.decrease + kSplitTolerance) {
                    best = {dec, attr, true, xs[t], {}};
                    have_best = true;
                }
            }
        }
    }
    if (!have_best || best.decrease <= kSplitTolerance) return majority_leaf(cc);

    auto node = std::make_unique<TreeNode>();
    node->attribute = best.attribute;
    Rows left, right;
    if (best.numeric) {
        node->kind = NodeKind::ThresholdSplit;
        node->threshold = best.threshold;
        for (int i : rows)
            (data.instances[i][best.attribute].numeric_value() <= best.threshold ? left : right)
                .push_back(i);
    } else {
        node->kind = NodeKind::SubsetSplit;
        node->subset = best.subset;
        for (int i : rows) {
            const int v = data.instances[i][best.attribute].nominal_index();
            (std::binary_search(node->subset.begin(), node->subset.end(), v) ? left : right)
                .push_back(i);
        }
    }
    node->children.push_back(cart_node(data, left, min_leaf));
    node->children.push_back(cart_node(data, right, min_leaf));
    return node;
}

// --- routing -------------------------------------------------------------------

// Child index an instance follows at a split node.
int route(const TreeNode& node, const Schema& schema, const Instance& instance) {
    const AttributeSpec& spec = schema.attributes[node.attribute];
    const Value& v = instance[node.attribute];
    if (v.is_missing())
        throw UnsupportedMissingError("cannot route an instance with a missing '" + spec.name +
                                      "' value");
    switch (node.kind) {
        case NodeKind::MultiwaySplit: {
            const int idx = v.nominal_index();
            if (idx < 0 || idx >= static_cast<int>(node.children.size()))
                throw DomainError("value index out of range for '" + spec.name + "'");
            return idx;
        }
        case NodeKind::SubsetSplit:
            return std::binary_search(node.subset.begin(), node.subset.end(), v.nominal_index())
                       ? 0
                       : 1;
        case NodeKind::ThresholdSplit:
            return v.numeric_value() <= node.threshold ? 0 : 1;
        default:
            throw DomainError("route: not a split node");
    }
}

std::vector<Rows> partition_rows(const TreeNode& node, const Dataset& data, const Rows& rows) {
    std::vector<Rows> parts(node.children.size());
    for (int i : rows) parts[route(node, data.schema, data.instances[i])].push_back(i);
    return parts;
}

// --- pessimistic pruning ---------------------------------------------------------

double binomial_cdf(long long e, long long n, double p) {
    if (p <= 0.0) return 1.0;
    if (p >= 1.0) return e >= n ? 1.0 : 0.0;
    const double logp = std::log(p);
    const double log1mp = std::log1p(-p);
    double total = 0.0;
    for (long long i = 0; i <= e; ++i) {
        const double log_comb = std::lgamma(static_cast<double>(n) + 1) -
                                std::lgamma(static_cast<double>(i) + 1) -
                                std::lgamma(static_cast<double>(n - i) + 1);
        total += std::exp(log_comb + static_cast<double>(i) * logp +
                          static_cast<double>(n - i) * log1mp);
    }
    return total;
}

struct PruneResult {
    TreePtr node;
    double bound = 0.0;
};

PruneResult prune_pessimistic_rec(const TreeNode& node, const Dataset& data, const Rows& rows,
                                  double cf) {
    if (node.kind == NodeKind::EmptyLeaf) return {TreeNode::empty_leaf(), 0.0};
    const ClassCounts cc = class_counts(data, rows);
    const long long n = cc.total();
    const long long errors = n - (n > 0 ? cc.counts[cc.majority()] : 0);
    if (node.kind == NodeKind::Leaf)
        return {clone(node), pessimistic_error_bound(n, errors, cf)};

    const auto parts = partition_rows(node, data, rows);
    auto pruned = std::make_unique<TreeNode>();
    pruned->kind = node.kind;
    pruned->attribute = node.attribute;
    pruned->threshold = node.threshold;
    pruned->subset = node.subset;
    double child_bound = 0.0;
    for (std::size_t c = 0; c < node.children.size(); ++c) {
        PruneResult r = prune_pessimistic_rec(*node.children[c], data, parts[c], cf);
        child_bound += r.bound;
        pruned->children.push_back(std::move(r.node));
    }
    if (n > 0) {
        const double leaf_bound = pessimistic_error_bound(n, errors, cf);
        if (leaf_bound <= child_bound) return {majority_leaf(cc), leaf_bound};
    }
    return {std::move(pruned), child_bound};
}

// --- cost-complexity pruning -------------------------------------------------------

// training errors and leaf count of a subtree, from stored leaf tallies
std::pair<long long, long long> subtree_stats(const TreeNode& node) {
    if (node.kind == NodeKind::Leaf) {
        long long n = 0, mx = 0;
        for (long long c : node.distribution) {
            n += c;
            mx = std::max(mx, c);
        }
        return {n - mx, 1};
    }
    if (node.kind == NodeKind::EmptyLeaf) return {0, 1};
    long long err = 0, leaves = 0;
    for (const auto& c : node.children) {
        auto [e, l] = subtree_stats(*c);
        err += e;
        leaves += l;
    }
    return {err, leaves};
}

// local complexity price of collapsing `node`: extra training errors per leaf saved
std::optional<double> node_price(const TreeNode& node, const ClassCounts& cc) {
    const auto [sub_err, leaves] = subtree_stats(node);
    const long long n = cc.total();
    if (node.is_leaf() || leaves < 2 || n == 0) return std::nullopt;
    const long long collapse_err = n - cc.counts[cc.majority()];
    return static_cast<double>(collapse_err - sub_err) / static_cast<double>(leaves - 1);
}

std::optional<double> min_price(const TreeNode& node, const Dataset& data, const Rows& rows) {
    if (node.is_leaf()) return std::nullopt;
    std::optional<double> best = node_price(node, class_counts(data, rows));
    const auto parts = partition_rows(node, data, rows);
    for (std::size_t c = 0; c < node.children.size(); ++c) {
        auto child = min_price(*node.children[c], data, parts[c]);
        if (child && (!best || *child < *best)) best = child;
    }
    return best;
}

// collapse, bottom-up, every internal node priced at or below `alpha`
TreePtr collapse_at(const TreeNode& node, const Dataset& data, const Rows& rows, double alpha) {
    if (node.is_leaf()) return clone(node);
    auto out = std::make_unique<TreeNode>();
    out->kind = node.kind;
    out->attribute = node.attribute;
    out->threshold = node.threshold;
    out->subset = node.subset;
    const auto parts = partition_rows(node, data, rows);
    for (std::size_t c = 0; c < node.children.size(); ++c)
        out->children.push_back(collapse_at(*node.children[c], data, parts[c], alpha));
    const ClassCounts cc = class_counts(data, rows);
    auto g = node_price(*out, cc);
    if (g && *g <= alpha + kSplitTolerance) return majority_leaf(cc);
    return out;
}

TreePtr prune_to_alpha_rows(const TreeNode& node, const Dataset& data, const Rows& rows,
                            double alpha) {
    if (node.is_leaf()) return clone(node);
    auto out = std::make_unique<TreeNode>();
    out->kind = node.kind;
    out->attribute = node.attribute;
    out->threshold = node.threshold;
    out->subset = node.subset;
    const auto parts = partition_rows(node, data, rows);
    for (std::size_t c = 0; c < node.children.size(); ++c)
        out->children.push_back(prune_to_alpha_rows(*node.children[c], data, parts[c], alpha));
    const ClassCounts cc = class_counts(data, rows);
    auto g = node_price(*out, cc);
    if (g && *g < alpha - kSplitTolerance) return majority_leaf(cc);
    return out;
}

Prediction classify_rec(const TreeNode& node, const Schema& schema, const Instance& instance) {
    const TreeNode* cur = &node;
    while (!cur->is_leaf()) cur = cur->children[route(*cur, schema, instance)].get();
    if (cur->kind == NodeKind::EmptyLeaf) return {};
    Prediction p;
    p.label = cur->label;
    const double total = static_cast<double>(
        std::accumulate(cur->distribution.begin(), cur->distribution.end(), 0LL));
    p.distribution.resize(cur->distribution.size(), 0.0);
    if (total > 0)
        for (std::size_t i = 0; i < cur->distribution.size(); ++i)
            p.distribution[i] = static_cast<double>(cur->distribution[i]) / total;
    return p;
}

} // namespace

TreePtr build_id3(const Dataset& data, const LearnerParams&) {
    check_training_input(data, /*nominal_only=*/true);
    std::vector<bool> used(data.schema.attributes.size(), false);
    return id3_node(data, all_rows(data), used);
}

TreePtr build_c45(const Dataset& data, const LearnerParams& params) {
    check_training_input(data, /*nominal_only=*/false);
    if (params.min_leaf < 1) throw DomainError("min_leaf must be at least 1");
    std::vector<bool> used(data.schema.attributes.size(), false);
    TreePtr tree = c45_node(data, all_rows(data), used, params.min_leaf);
    if (params.pruning) return prune_pessimistic(*tree, data, params.confidence_factor);
    return tree;
}

TreePtr build_cart(const Dataset& data, const LearnerParams& params) {
    check_training_input(data, /*nominal_only=*/false);
    if (params.min_leaf < 1) throw DomainError("min_leaf must be at least 1");
    TreePtr tree = cart_node(data, all_rows(data), params.min_leaf);
    if (params.pruning) return prune_cost_complexity(*tree, data, params);
    return tree;
}

TreePtr build_tree(Algorithm algorithm, const Dataset& data, const LearnerParams& params) {
    switch (algorithm) {
        case Algorithm::Id3: return build_id3(data, params);
        case Algorithm::C45: return build_c45(data, params);
        case Algorithm::Cart: return build_cart(data, params);
    }
    throw DomainError("unknown algorithm");
}

double pessimistic_error_bound(long long n, long long e, double confidence_factor) {
    if (n < 0 || e < 0) throw DomainError("pessimistic_error_bound: negative counts");
    if (!(confidence_factor > 0.0 && confidence_factor < 1.0))
        throw DomainError("pessimistic_error_bound: confidence factor must be in (0,1)");
    if (n == 0) return 0.0;
    if (e >= n) return static_cast<double>(n);
    // Invert the one-sided binomial tail: the largest error rate p with
    // P(Bin(n,p) <= e) still above the confidence factor.
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (binomial_cdf(e, n, mid) > confidence_factor)
            lo = mid;
        else
            hi = mid;
    }
    return static_cast<double>(n) * 0.5 * (lo + hi);
}

TreePtr prune_pessimistic(const TreeNode& tree, const Dataset& training,
                          double confidence_factor) {
    check_tree(tree, training.schema);
    if (!(confidence_factor > 0.0 && confidence_factor < 1.0))
        throw DomainError("prune_pessimistic: confidence factor must be in (0,1)");
    return prune_pessimistic_rec(tree, training, all_rows(training), confidence_factor).node;
}

std::vector<double> weakest_link_alphas(const TreeNode& tree, const Dataset& training) {
    check_tree(tree, training.schema);
    const Rows rows = all_rows(training);
    std::vector<double> alphas;
    TreePtr work = clone(tree);
    while (!work->is_leaf()) {
        auto g = min_price(*work, training, rows);
        if (!g) break; // no collapsible node carries instances
        alphas.push_back(*g);
        work = collapse_at(*work, training, rows, *g);
    }
    std::vector<double> out;
    for (double a : alphas)
        if (out.empty() || a > out.back() + kSplitTolerance) out.push_back(a);
    return out;
}

TreePtr prune_to_alpha(const TreeNode& tree, const Dataset& training, double alpha) {
    check_tree(tree, training.schema);
    return prune_to_alpha_rows(tree, training, all_rows(training), alpha);
}

TreePtr prune_cost_complexity(const TreeNode& tree, const Dataset& training,
                              const LearnerParams& params) {
    check_tree(tree, training.schema);
    if (tree.is_leaf()) return clone(tree);
    const long long n = static_cast<long long>(training.size());
    if (n < 2) return clone(tree);

    const std::vector<double> alphas = weakest_link_alphas(tree, training);
    if (alphas.empty()) return clone(tree);

    // one candidate per subtree in the sequence: the full tree at 0, interior
    // subtrees at the geometric mean of neighbouring alphas (right endpoint
    // when the left one is 0), and the root collapse beyond the maximum
    std::vector<double> betas = {0.0};
    for (std::size_t j = 0; j + 1 < alphas.size(); ++j)
        betas.push_back(alphas[j] > 0.0 ? std::sqrt(alphas[j] * alphas[j + 1]) : alphas[j + 1]);
    betas.push_back(alphas.back() > 0.0 ? 2.0 * alphas.back() : 1.0);

    const int k = std::max(2, std::min(params.cc_folds, static_cast<int>(n)));
    const Rows rows = all_rows(training);
    const std::vector<int> fold_of =
        stratified_fold_ids(training, rows, k, params.seed, /*canonical_order=*/true);

    std::vector<long long> errors(betas.size(), 0);
    for (int f = 0; f < k; ++f) {
        Rows train, test;
        for (std::size_t i = 0; i < rows.size(); ++i)
            (fold_of[i] == f ? test : train).push_back(rows[i]);
        if (train.empty() || test.empty()) continue;
        const TreePtr grown = cart_node(training, train, params.min_leaf);
        for (std::size_t b = 0; b < betas.size(); ++b) {
            const TreePtr candidate = prune_to_alpha_rows(*grown, training, train, betas[b]);
            for (int i : test) {
                const Prediction p =
                    classify_rec(*candidate, training.schema, training.instances[i]);
                if (!p.classified() || *p.label != training.class_of(i)) ++errors[b];
            }
        }
    }

    std::vector<double> rates(betas.size());
    for (std::size_t b = 0; b < betas.size(); ++b)
        rates[b] = static_cast<double>(errors[b]) / static_cast<double>(n);
    const double rmin = *std::min_element(rates.begin(), rates.end());
    const double se = std::sqrt(rmin * (1.0 - rmin) / static_cast<double>(n));
    double chosen = 0.0;
    for (std::size_t b = 0; b < betas.size(); ++b)
        if (rates[b] <= rmin + se + kSplitTolerance) chosen = betas[b];

    return prune_to_alpha(tree, training, chosen);
}

Prediction classify(const TreeNode& tree, const Schema& schema, const Instance& instance) {
    if (instance.size() != schema.attributes.size())
        throw DomainError("classify: instance arity does not match the schema");
    return classify_rec(tree, schema, instance);
}

} // namespace treekit
