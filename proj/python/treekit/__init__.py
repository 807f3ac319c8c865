"""Decision-tree toolkit: ID3, C4.5 and CART with stratified cross-validation,
pruning, rule extraction and a small ARFF reader/writer.

The heavy lifting happens in the native ``_treekit`` extension; this package
re-exports its public names.
"""

from ._treekit import (
    Dataset,
    DomainError,
    Model,
    __version__,
    binary_gini_decrease,
    class_counts,
    cross_validate,
    discretize_attendance,
    discretize_class_test,
    discretize_mark,
    entropy,
    enumerate_binary_partitions,
    gain_ratio,
    gini,
    information_gain,
    load_embedded_students,
    parse_arff,
    pessimistic_error_bound,
    split_info,
    stratified_folds,
    train,
    write_arff,
)

__all__ = [
    "Dataset",
    "DomainError",
    "Model",
    "__version__",
    "binary_gini_decrease",
    "class_counts",
    "cross_validate",
    "discretize_attendance",
    "discretize_class_test",
    "discretize_mark",
    "entropy",
    "enumerate_binary_partitions",
    "gain_ratio",
    "gini",
    "information_gain",
    "load_embedded_students",
    "parse_arff",
    "pessimistic_error_bound",
    "split_info",
    "stratified_folds",
    "train",
    "write_arff",
]
