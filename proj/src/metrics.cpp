#include "treekit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace treekit {

long long ClassCounts::total() const {
    return std::accumulate(counts.begin(), counts.end(), 0LL);
}

bool ClassCounts::pure() const {
    int nonzero = 0;
    for (long long c : counts)
        if (c > 0) ++nonzero;
    return nonzero <= 1;
}

int ClassCounts::majority() const {
    int best = -1;
    long long best_count = -1;
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] > best_count) { // strict > keeps the earliest on ties
            best = static_cast<int>(i);
            best_count = counts[i];
        }
    return best;
}

ClassCounts class_counts(const Dataset& data) {
    ClassCounts tally{std::vector<long long>(data.schema.num_classes(), 0)};
    for (std::size_t i = 0; i < data.size(); ++i) ++tally.counts[data.class_of(i)];
    return tally;
}

ClassCounts class_counts(const Dataset& data, const std::vector<int>& rows) {
    ClassCounts tally{std::vector<long long>(data.schema.num_classes(), 0)};
    for (int i : rows) ++tally.counts[data.class_of(static_cast<std::size_t>(i))];
    return tally;
}

double entropy(const ClassCounts& counts) {
    const double n = static_cast<double>(counts.total());
    if (n <= 0) return 0.0;
    double h = 0.0;
    for (long long c : counts.counts) {
        if (c <= 0) continue;
        const double p = static_cast<double>(c) / n;
        h -= p * std::log2(p);
    }
    return h;
}

double gini(const ClassCounts& counts) {
    const double n = static_cast<double>(counts.total());
    if (n <= 0) return 0.0;
    double sum_sq = 0.0;
    for (long long c : counts.counts) {
        const double p = static_cast<double>(c) / n;
        sum_sq += p * p;
    }
    return 1.0 - sum_sq;
}

namespace {

// Resolves `attribute` for the entropy-based metrics: must exist, must be
// nominal, must not be the class.
std::size_t resolve_nominal_predictor(const Dataset& data, std::string_view attribute) {
    auto idx = data.schema.attribute_index(attribute);
    if (!idx) throw DomainError("unknown attribute '" + std::string(attribute) + "'");
    if (*idx == data.schema.class_index)
        throw DomainError("'" + std::string(attribute) + "' is the class attribute");
    const AttributeSpec& spec = data.schema.attributes[*idx];
    if (!spec.is_nominal())
        throw UnsupportedAttributeError("'" + std::string(attribute) +
                                        "' is numeric; this metric needs a nominal attribute");
    return *idx;
}

int nominal_at(const Dataset& data, std::size_t row, std::size_t attr) {
    const Value& v = data.instances[row][attr];
    if (v.is_missing())
        throw UnsupportedMissingError("missing value in attribute '" +
                                      data.schema.attributes[attr].name + "', instance " +
                                      std::to_string(row));
    return v.nominal_index();
}

// Class tallies per declared value of a nominal attribute.
std::vector<ClassCounts> branch_tallies(const Dataset& data, std::size_t attr) {
    const std::size_t k = data.schema.attributes[attr].values.size();
    std::vector<ClassCounts> branches(
        k, ClassCounts{std::vector<long long>(data.schema.num_classes(), 0)});
    for (std::size_t i = 0; i < data.size(); ++i)
        ++branches[nominal_at(data, i, attr)].counts[data.class_of(i)];
    return branches;
}

double weighted_child_entropy(const std::vector<ClassCounts>& branches, double n) {
    double h = 0.0;
    for (const ClassCounts& b : branches) {
        const double size = static_cast<double>(b.total());
        if (size > 0) h += size / n * entropy(b);
    }
    return h;
}

} // namespace

double information_gain(const Dataset& data, std::string_view attribute) {
    const std::size_t attr = resolve_nominal_predictor(data, attribute);
    if (data.empty()) throw DomainError("information_gain: empty dataset");
    const double n = static_cast<double>(data.size());
    return entropy(class_counts(data)) - weighted_child_entropy(branch_tallies(data, attr), n);
}

double split_info(const Dataset& data, std::string_view attribute) {
    const std::size_t attr = resolve_nominal_predictor(data, attribute);
    if (data.empty()) throw DomainError("split_info: empty dataset");
    ClassCounts sizes{{}};
    for (const ClassCounts& b : branch_tallies(data, attr)) sizes.counts.push_back(b.total());
    return entropy(sizes);
}

std::optional<double> gain_ratio(const Dataset& data, std::string_view attribute) {
    const double si = split_info(data, attribute);
    if (si <= 0.0) return std::nullopt; // constant attribute: not a candidate
    return information_gain(data, attribute) / si;
}

double binary_gini_decrease(const Dataset& data, std::string_view attribute,
                            const std::vector<std::string>& left_values) {
    const std::size_t attr = resolve_nominal_predictor(data, attribute);
    if (data.empty()) throw DomainError("binary_gini_decrease: empty dataset");
    const AttributeSpec& spec = data.schema.attributes[attr];

    std::vector<bool> on_left(spec.values.size(), false);
    for (const std::string& v : left_values) {
        auto idx = spec.value_index(v);
        if (!idx)
            throw DomainError("binary_gini_decrease: '" + v + "' is not a declared value of '" +
                              spec.name + "'");
        on_left[*idx] = true;
    }
    const std::size_t left_declared = std::count(on_left.begin(), on_left.end(), true);
    if (left_declared == 0 || left_declared == spec.values.size())
        throw DomainError("binary_gini_decrease: both sides of the partition must be non-empty");

    const std::size_t num_classes = data.schema.num_classes();
    ClassCounts left{std::vector<long long>(num_classes, 0)};
    ClassCounts right{std::vector<long long>(num_classes, 0)};
    for (std::size_t i = 0; i < data.size(); ++i) {
        const int v = nominal_at(data, i, attr);
        ++(on_left[v] ? left : right).counts[data.class_of(i)];
    }
    const double n = static_cast<double>(data.size());
    const double child = static_cast<double>(left.total()) / n * gini(left) +
                         static_cast<double>(right.total()) / n * gini(right);
    return gini(class_counts(data)) - child;
}

std::vector<std::vector<int>> canonical_subsets(int m) {
    std::vector<std::vector<int>> out;
    if (m < 2) return out;
    if (m > 30) throw DomainError("canonical_subsets: too many values to enumerate");
    // Subsets containing item 0, except the full set, smallest first. Within
    // one size, members {1..m-1} advance in lexicographic order.
    for (int extra = 0; extra < m - 1; ++extra) {
        std::vector<int> pick(extra);
        std::iota(pick.begin(), pick.end(), 1);
        while (true) {
            std::vector<int> subset = {0};
            subset.insert(subset.end(), pick.begin(), pick.end());
            out.push_back(std::move(subset));
            // next combination of `extra` items from {1..m-1}
            int pos = extra - 1;
            while (pos >= 0 && pick[pos] == m - 1 - (extra - 1 - pos)) --pos;
            if (pos < 0) break;
            ++pick[pos];
            for (int q = pos + 1; q < extra; ++q) pick[q] = pick[q - 1] + 1;
        }
    }
    return out;
}

std::vector<std::vector<std::string>> enumerate_binary_partitions(const AttributeSpec& attribute) {
    std::vector<std::vector<std::string>> out;
    if (!attribute.is_nominal()) return out;
    for (const auto& subset : canonical_subsets(static_cast<int>(attribute.values.size()))) {
        std::vector<std::string> side;
        side.reserve(subset.size());
        for (int v : subset) side.push_back(attribute.values[v]);
        out.push_back(std::move(side));
    }
    return out;
}

namespace {

std::string join(const std::vector<std::string>& xs, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += xs[i];
    }
    return out;
}

std::optional<SplitStatistics> best_gini_partition(const Dataset& data,
                                                   std::string_view attribute) {
    const AttributeSpec& spec =
        data.schema.attributes[resolve_nominal_predictor(data, attribute)];
    auto partitions = enumerate_binary_partitions(spec);
    if (partitions.empty()) return std::nullopt;
    std::optional<SplitStatistics> best;
    for (const auto& side : partitions) {
        const double decrease = binary_gini_decrease(data, attribute, side);
        if (!best || decrease > best->value + kSplitTolerance) {
            std::vector<std::string> rest;
            for (const std::string& v : spec.values)
                if (std::find(side.begin(), side.end(), v) == side.end()) rest.push_back(v);
            best = SplitStatistics{std::string(attribute), SplitCriterion::GiniDecrease, decrease,
                                   "{" + join(side, ", ") + "} vs {" + join(rest, ", ") + "}"};
        }
    }
    return best;
}

} // namespace

std::optional<SplitStatistics> candidate_statistics(const Dataset& data,
                                                    std::string_view attribute,
                                                    SplitCriterion criterion) {
    switch (criterion) {
        case SplitCriterion::InformationGain: {
            const std::size_t attr = resolve_nominal_predictor(data, attribute);
            SplitStatistics stats{std::string(attribute), criterion,
                                  information_gain(data, attribute),
                                  join(data.schema.attributes[attr].values, " | ")};
            return stats;
        }
        case SplitCriterion::GainRatio: {
            const std::size_t attr = resolve_nominal_predictor(data, attribute);
            auto ratio = gain_ratio(data, attribute);
            if (!ratio) return std::nullopt;
            return SplitStatistics{std::string(attribute), criterion, *ratio,
                                   join(data.schema.attributes[attr].values, " | ")};
        }
        case SplitCriterion::GiniDecrease:
            return best_gini_partition(data, attribute);
    }
    throw DomainError("candidate_statistics: unknown criterion");
}

} // namespace treekit
