#include "treekit/rules.hpp"

#include "text_util.hpp"

#include <algorithm>
#include <numeric>

namespace treekit {

namespace {

void extract_rec(const TreeNode& node, const Schema& schema, std::vector<Condition>& path,
                 std::vector<Rule>& out) {
    if (node.kind == NodeKind::Leaf) {
        out.push_back({path, node.label, node.distribution});
        return;
    }
    if (node.kind == NodeKind::EmptyLeaf) {
        out.push_back({path, std::nullopt, {}});
        return;
    }
    auto descend = [&](Condition condition, const TreeNode& child) {
        path.push_back(std::move(condition));
        extract_rec(child, schema, path, out);
        path.pop_back();
    };
    switch (node.kind) {
        case NodeKind::MultiwaySplit:
            for (std::size_t v = 0; v < node.children.size(); ++v) {
                Condition c;
                c.attribute = node.attribute;
                c.test = Condition::Test::Equals;
                c.value = static_cast<int>(v);
                descend(std::move(c), *node.children[v]);
            }
            break;
        case NodeKind::SubsetSplit: {
            const AttributeSpec& spec = schema.attributes[node.attribute];
            Condition in;
            in.attribute = node.attribute;
            in.test = Condition::Test::In;
            in.subset = node.subset;
            Condition rest = in;
            rest.subset.clear();
            for (int v = 0; v < static_cast<int>(spec.values.size()); ++v)
                if (!std::binary_search(node.subset.begin(), node.subset.end(), v))
                    rest.subset.push_back(v);
            descend(std::move(in), *node.children[0]);
            descend(std::move(rest), *node.children[1]);
            break;
        }
        case NodeKind::ThresholdSplit: {
            Condition le;
            le.attribute = node.attribute;
            le.test = Condition::Test::LessEq;
            le.threshold = node.threshold;
            Condition gt = le;
            gt.test = Condition::Test::Greater;
            descend(std::move(le), *node.children[0]);
            descend(std::move(gt), *node.children[1]);
            break;
        }
        default:
            break;
    }
}

bool holds(const Condition& condition, const Schema& schema, const Instance& instance) {
    const Value& v = instance[condition.attribute];
    if (v.is_missing())
        throw UnsupportedMissingError("cannot evaluate a rule on a missing '" +
                                      schema.attributes[condition.attribute].name + "' value");
    switch (condition.test) {
        case Condition::Test::Equals: return v.nominal_index() == condition.value;
        case Condition::Test::In:
            return std::binary_search(condition.subset.begin(), condition.subset.end(),
                                      v.nominal_index());
        case Condition::Test::LessEq: return v.numeric_value() <= condition.threshold;
        case Condition::Test::Greater: return v.numeric_value() > condition.threshold;
    }
    return false;
}

// The declared-value indices a nominal condition lets through.
std::vector<int> covered_values(const Condition& condition) {
    if (condition.test == Condition::Test::Equals) return {condition.value};
    return condition.subset;
}

// Tries to fold rule `b` into rule `a`: identical prefixes and consequents,
// final conditions on the same attribute whose coverage can be unioned.
bool try_merge(Rule& a, const Rule& b, const Schema& schema) {
    if (!a.consequent || !b.consequent || *a.consequent != *b.consequent) return false;
    if (a.conditions.empty() || b.conditions.empty() ||
        a.conditions.size() != b.conditions.size())
        return false;
    if (!std::equal(a.conditions.begin(), a.conditions.end() - 1, b.conditions.begin()))
        return false;
    Condition& last_a = a.conditions.back();
    const Condition& last_b = b.conditions.back();
    if (last_a.attribute != last_b.attribute) return false;

    const AttributeSpec& spec = schema.attributes[last_a.attribute];
    if (spec.is_nominal()) {
        if ((last_a.test != Condition::Test::Equals && last_a.test != Condition::Test::In) ||
            (last_b.test != Condition::Test::Equals && last_b.test != Condition::Test::In))
            return false;
        std::vector<int> merged = covered_values(last_a);
        const std::vector<int> extra = covered_values(last_b);
        merged.insert(merged.end(), extra.begin(), extra.end());
        std::sort(merged.begin(), merged.end());
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        if (merged.size() == spec.values.size()) {
            a.conditions.pop_back(); // covers everything: the test is vacuous
        } else {
            last_a.test = Condition::Test::In;
            last_a.value = -1;
            last_a.subset = std::move(merged);
        }
    } else {
        // <= t with > t (same threshold) covers the whole axis
        const bool complementary =
            last_a.threshold == last_b.threshold &&
            ((last_a.test == Condition::Test::LessEq && last_b.test == Condition::Test::Greater) ||
             (last_a.test == Condition::Test::Greater && last_b.test == Condition::Test::LessEq));
        if (!complementary) return false;
        a.conditions.pop_back();
    }

    if (a.distribution.size() < b.distribution.size())
        a.distribution.resize(b.distribution.size(), 0);
    for (std::size_t i = 0; i < b.distribution.size(); ++i) a.distribution[i] += b.distribution[i];
    return true;
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

std::string condition_text(const Condition& condition, const Schema& schema) {
    const AttributeSpec& spec = schema.attributes[condition.attribute];
    switch (condition.test) {
        case Condition::Test::Equals:
            return spec.name + " = " + quoted(spec.values[condition.value]);
        case Condition::Test::In: {
            std::string out = spec.name + " IN {";
            for (std::size_t i = 0; i < condition.subset.size(); ++i) {
                if (i) out += ", ";
                out += quoted(spec.values[condition.subset[i]]);
            }
            return out + "}";
        }
        case Condition::Test::LessEq:
            return spec.name + " <= " + detail::format_double(condition.threshold);
        case Condition::Test::Greater:
            return spec.name + " > " + detail::format_double(condition.threshold);
    }
    return "?";
}

std::string rule_antecedent(const Rule& rule, const Schema& schema) {
    if (rule.conditions.empty()) return "TRUE";
    std::string out;
    for (std::size_t i = 0; i < rule.conditions.size(); ++i) {
        if (i) out += " AND ";
        out += condition_text(rule.conditions[i], schema);
    }
    return out;
}

} // namespace

RuleSet extract_rules(const TreeNode& tree, const Schema& schema) {
    check_tree(tree, schema);
    RuleSet set;
    set.schema = schema;
    std::vector<Condition> path;
    extract_rec(tree, schema, path, set.rules);
    return set;
}

Prediction rules_classify(const RuleSet& rules, const Instance& instance) {
    if (instance.size() != rules.schema.attributes.size())
        throw DomainError("rules_classify: instance arity does not match the schema");
    for (const Rule& rule : rules.rules) {
        bool match = true;
        for (const Condition& c : rule.conditions)
            if (!holds(c, rules.schema, instance)) {
                match = false;
                break;
            }
        if (!match) continue;
        if (!rule.consequent) return {};
        Prediction p;
        p.label = rule.consequent;
        const double total = static_cast<double>(
            std::accumulate(rule.distribution.begin(), rule.distribution.end(), 0LL));
        p.distribution.resize(rules.schema.num_classes(), 0.0);
        for (std::size_t i = 0; i < rule.distribution.size() && total > 0; ++i)
            p.distribution[i] = static_cast<double>(rule.distribution[i]) / total;
        return p;
    }
    return {};
}

RuleSet merge_adjacent_siblings(const RuleSet& rules) {
    RuleSet out = rules;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Rule> next;
        for (Rule& rule : out.rules) {
            if (!next.empty() && try_merge(next.back(), rule, out.schema))
                changed = true;
            else
                next.push_back(std::move(rule));
        }
        out.rules = std::move(next);
    }
    return out;
}

std::string render_rules(const RuleSet& rules) {
    const std::string class_name = rules.schema.class_attribute().name;
    std::string out;
    for (const Rule& rule : rules.rules) {
        out += "IF " + rule_antecedent(rule, rules.schema) + " THEN " + class_name + " = ";
        out += rule.consequent ? quoted(rules.schema.class_attribute().values[*rule.consequent])
                               : "UNCLASSIFIED";
        out += "\n";
    }
    return out;
}

std::string render_rules_csv(const RuleSet& rules) {
    std::string out = "antecedent,consequent\n";
    for (const Rule& rule : rules.rules) {
        std::string antecedent = rule_antecedent(rule, rules.schema);
        std::string escaped;
        for (char c : antecedent) {
            escaped += c;
            if (c == '"') escaped += '"';
        }
        out += "\"" + escaped + "\",";
        out += rule.consequent ? rules.schema.class_attribute().values[*rule.consequent]
                               : "UNCLASSIFIED";
        out += "\n";
    }
    return out;
}

} // namespace treekit
