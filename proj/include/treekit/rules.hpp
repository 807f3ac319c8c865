#pragma once

#include "treekit/learn.hpp"
#include "treekit/tree.hpp"

#include <optional>
#include <string>
#include <vector>

namespace treekit {

// One test along a root-to-leaf path.
struct Condition {
    enum class Test { Equals, In, LessEq, Greater };

    int attribute = -1;
    Test test = Test::Equals;
    int value = -1;           // Equals: declared-value index
    std::vector<int> subset;  // In: declared-value indices, ascending
    double threshold = 0.0;   // LessEq / Greater

    bool operator==(const Condition&) const = default;
};

struct Rule {
    std::vector<Condition> conditions;     // root-to-leaf order
    std::optional<int> consequent;         // class index; nullopt = unclassified
    std::vector<long long> distribution;   // training tally at the leaf
};

struct RuleSet {
    Schema schema;
    std::vector<Rule> rules; // depth-first leaf order; mutually exclusive and exhaustive
};

// One rule per leaf (EmptyLeaf included, as an unclassified rule), conditions
// in root-to-leaf order, rules in depth-first order.
RuleSet extract_rules(const TreeNode& tree, const Schema& schema);

// First (only, by construction) matching rule decides. Instances matching an
// unclassified rule, or no rule at all, come back unclassified.
Prediction rules_classify(const RuleSet& rules, const Instance& instance);

// Cosmetic merge of consecutive rules that differ only in their final
// condition: same-consequent sibling branches combine into one IN condition
// (dropped entirely once it covers every declared value, or both sides of a
// threshold). Classification behaviour is unchanged.
RuleSet merge_adjacent_siblings(const RuleSet& rules);

// IF <cond> AND <cond> THEN <class> = '<label>' lines; TRUE for an empty
// antecedent, UNCLASSIFIED for an empty-branch consequent.
std::string render_rules(const RuleSet& rules);

// antecedent,consequent rows with a header; the antecedent is double-quoted.
std::string render_rules_csv(const RuleSet& rules);

} // namespace treekit
