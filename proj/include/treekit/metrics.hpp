#pragma once

#include "treekit/data.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace treekit {

// Per-class frequency tally. counts follows the declared class-value order.
struct ClassCounts {
    std::vector<long long> counts;

    long long total() const;
    bool pure() const; // at most one nonzero count
    int majority() const; // earliest declared class among the maxima; -1 if empty
};

// Tally of the class column over all instances (missing class -> error).
ClassCounts class_counts(const Dataset& data);
ClassCounts class_counts(const Dataset& data, const std::vector<int>& rows);

// Shannon entropy in bits. 0 for an empty tally; 0·log0 taken as 0.
double entropy(const ClassCounts& counts);

// Gini impurity: 1 − Σ p².
double gini(const ClassCounts& counts);

// Information gain of a multiway split on a nominal attribute (by name).
// Numeric attributes, the class attribute, unknown names, missing values in
// the attribute column, and empty datasets are all errors.
double information_gain(const Dataset& data, std::string_view attribute);

// Entropy of the partition sizes themselves (split information).
double split_info(const Dataset& data, std::string_view attribute);

// gain / split_info, or nullopt when the attribute is not a candidate
// (split_info == 0, i.e. all instances share one value).
std::optional<double> gain_ratio(const Dataset& data, std::string_view attribute);

// Gini decrease of the binary partition {left_values} vs the rest of the
// declared values. Both sides must be non-empty subsets of the declared list.
double binary_gini_decrease(const Dataset& data, std::string_view attribute,
                            const std::vector<std::string>& left_values);

// All proper subsets of {0..m-1} that contain 0, i.e. one representative per
// two-block partition of m items (the complement never appears separately).
// Ordered by subset size, then lexicographically by member positions. m items
// yield 2^(m-1) − 1 subsets; m < 2 yields none.
std::vector<std::vector<int>> canonical_subsets(int m);

// canonical_subsets over a nominal attribute's declared values: each entry is
// the partition block containing the first declared value, as value names.
std::vector<std::vector<std::string>> enumerate_binary_partitions(const AttributeSpec& attribute);

enum class SplitCriterion { InformationGain, GainRatio, GiniDecrease };

// Best split statistics for one attribute under one criterion, mainly for
// inspection. partition describes the winning layout in rendered form.
struct SplitStatistics {
    std::string attribute;
    SplitCriterion criterion = SplitCriterion::InformationGain;
    double value = 0.0;
    std::string partition;
};

// nullopt when the attribute is not a candidate under the criterion (e.g.
// gain ratio of a constant column, or no valid binary partition).
std::optional<SplitStatistics> candidate_statistics(const Dataset& data,
                                                    std::string_view attribute,
                                                    SplitCriterion criterion);

// Two split-quality values closer than this are tied; ties are broken by
// declaration/enumeration order.
inline constexpr double kSplitTolerance = 1e-12;

} // namespace treekit
