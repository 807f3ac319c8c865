#pragma once

// Shared seeded shuffle / stratified fold assignment used by both the
// evaluation API and the cost-complexity pruner's internal cross-validation.

#include "treekit/data.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace treekit::detail {

// In-place Fisher-Yates, descending, with a modulo draw. Deliberately
// hand-rolled: std::shuffle's draw sequence is implementation-defined, this
// one reproduces across toolchains (and across language ports) for a given
// mt19937_64 seed.
inline void seeded_shuffle(std::vector<int>& xs, std::mt19937_64& rng) {
    for (std::size_t i = xs.size(); i-- > 1;) {
        const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
        std::swap(xs[i], xs[j]);
    }
}

// Orders instance cells: missing first, then nominal by declared value text,
// then numeric by value. Only used to derive an instance-order-independent
// canonical ordering; the choice of order itself is arbitrary.
int compare_instances(const Dataset& data, int a, int b);

// Stratified fold assignment for the given rows (indices into data).
// Returns fold ids aligned with `rows`. Per class in declared order, the
// class's rows are shuffled and dealt round-robin by a counter that runs on
// across classes, so fold sizes differ by at most one overall and per class.
// With canonical_order, rows are first sorted by instance content so the
// assignment is invariant to instance order.
std::vector<int> stratified_fold_ids(const Dataset& data, const std::vector<int>& rows, int k,
                                     std::uint64_t seed, bool canonical_order);

} // namespace treekit::detail
