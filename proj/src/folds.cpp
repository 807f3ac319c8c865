#include "folds.hpp"

#include <algorithm>
#include <numeric>

namespace treekit::detail {

namespace {

int compare_values(const AttributeSpec& spec, const Value& x, const Value& y) {
    auto rank = [](const Value& v) { return v.is_missing() ? 0 : (v.is_nominal() ? 1 : 2); };
    if (rank(x) != rank(y)) return rank(x) < rank(y) ? -1 : 1;
    if (x.is_missing()) return 0;
    if (x.is_nominal()) {
        const std::string& a = spec.values[x.nominal_index()];
        const std::string& b = spec.values[y.nominal_index()];
        return a.compare(b) < 0 ? -1 : (a == b ? 0 : 1);
    }
    if (x.numeric_value() < y.numeric_value()) return -1;
    return x.numeric_value() > y.numeric_value() ? 1 : 0;
}

} // namespace

int compare_instances(const Dataset& data, int a, int b) {
    const Instance& x = data.instances[a];
    const Instance& y = data.instances[b];
    for (std::size_t i = 0; i < data.schema.attributes.size(); ++i) {
        const int c = compare_values(data.schema.attributes[i], x[i], y[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::vector<int> stratified_fold_ids(const Dataset& data, const std::vector<int>& rows, int k,
                                     std::uint64_t seed, bool canonical_order) {
    if (k < 2 || k > static_cast<int>(rows.size()))
        throw DomainError("stratified folds: k must be in [2, " + std::to_string(rows.size()) +
                          "], got " + std::to_string(k));

    // positions into `rows`, optionally in canonical (content) order
    std::vector<int> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    if (canonical_order)
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return compare_instances(data, rows[a], rows[b]) < 0;
        });

    std::mt19937_64 rng(seed);
    std::vector<int> fold_of(rows.size(), 0);
    long long counter = 0;
    const int num_classes = static_cast<int>(data.schema.num_classes());
    for (int cls = 0; cls < num_classes; ++cls) {
        std::vector<int> members;
        for (int pos : order)
            if (data.class_of(rows[pos]) == cls) members.push_back(pos);
        seeded_shuffle(members, rng);
        for (int pos : members) fold_of[pos] = static_cast<int>(counter++ % k);
    }
    return fold_of;
}

} // namespace treekit::detail
