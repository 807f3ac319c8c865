#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "treekit/arff.hpp"
#include "treekit/data.hpp"
#include "treekit/eval.hpp"
#include "treekit/learn.hpp"
#include "treekit/metrics.hpp"
#include "treekit/rules.hpp"
#include "treekit/tree.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;

namespace {

using treekit::AttributeSpec;
using treekit::ClassCounts;
using treekit::Dataset;
using treekit::DomainError;
using treekit::Instance;
using treekit::LearnerParams;
using treekit::Schema;
using treekit::TreeNode;
using treekit::Value;

// A trained tree together with the schema it was trained against.
struct Model {
    std::string algorithm;
    Schema schema;
    std::shared_ptr<const TreeNode> tree;
};

std::string join_diagnostics(const treekit::ParseResult& result) {
    if (result.diagnostics.empty()) return "parse failed";
    const auto& d = result.diagnostics.front();
    std::string text = std::to_string(d.line) + ":" + std::to_string(d.column) + ": " + d.message;
    if (result.diagnostics.size() > 1) {
        text += " (and " + std::to_string(result.diagnostics.size() - 1) + " more)";
    }
    return text;
}

py::object value_to_py(const Value& value, const AttributeSpec& spec) {
    if (value.is_missing()) return py::none();
    if (value.is_numeric()) return py::float_(value.numeric_value());
    return py::str(spec.values.at(static_cast<std::size_t>(value.nominal_index())));
}

Value py_to_value(const py::handle& cell, const AttributeSpec& spec) {
    if (cell.is_none()) return Value::missing();
    if (spec.is_nominal()) {
        if (!py::isinstance<py::str>(cell)) {
            throw DomainError("attribute '" + spec.name + "': expected a string or None");
        }
        const auto text = cell.cast<std::string>();
        const auto index = spec.value_index(text);
        if (!index) {
            throw DomainError("attribute '" + spec.name + "': undeclared value '" + text + "'");
        }
        return Value::nominal(*index);
    }
    if (!py::isinstance<py::float_>(cell) && !py::isinstance<py::int_>(cell)) {
        throw DomainError("attribute '" + spec.name + "': expected a number or None");
    }
    return Value::numeric(cell.cast<double>());
}

Instance instance_from_py(const py::handle& cells, const Schema& schema) {
    if (py::isinstance<py::str>(cells) || !py::isinstance<py::sequence>(cells)) {
        throw DomainError("expected a sequence of cells, one per attribute");
    }
    const auto seq = py::reinterpret_borrow<py::sequence>(cells);
    if (py::len(seq) != schema.attributes.size()) {
        throw DomainError("expected " + std::to_string(schema.attributes.size()) +
                          " cells, got " + std::to_string(py::len(seq)));
    }
    Instance instance;
    instance.values.reserve(schema.attributes.size());
    for (std::size_t i = 0; i < schema.attributes.size(); ++i) {
        instance.values.push_back(py_to_value(seq[i], schema.attributes[i]));
    }
    return instance;
}

const AttributeSpec& attribute_or_throw(const Dataset& data, const std::string& name) {
    const auto index = data.schema.attribute_index(name);
    if (!index) throw DomainError("unknown attribute '" + name + "'");
    return data.schema.attributes[*index];
}

LearnerParams make_params(bool pruning, int min_leaf, double confidence_factor, int cc_folds,
                          std::uint64_t seed) {
    LearnerParams params;
    params.pruning = pruning;
    params.min_leaf = min_leaf;
    params.confidence_factor = confidence_factor;
    params.cc_folds = cc_folds;
    params.seed = seed;
    return params;
}

treekit::Algorithm algorithm_or_throw(const std::string& name) {
    const auto algorithm = treekit::algorithm_from_string(name);
    if (!algorithm) {
        throw DomainError("unknown algorithm '" + name + "' (expected id3, c45 or cart)");
    }
    return *algorithm;
}

treekit::RuleSet model_rules(const Model& model, bool merge) {
    treekit::RuleSet rules = treekit::extract_rules(*model.tree, model.schema);
    if (merge) rules = treekit::merge_adjacent_siblings(rules);
    return rules;
}

py::dict report_to_dict(const treekit::EvaluationReport& report, bool pruning) {
    py::list precision;
    for (const auto& p : report.precision) {
        precision.append(p ? py::object(py::float_(*p)) : py::object(py::none()));
    }
    py::dict d;
    d["algorithm"] = report.algorithm;
    d["k"] = report.k;
    d["seed"] = report.seed;
    d["pruning"] = pruning;
    d["correct"] = report.correct;
    d["incorrect"] = report.incorrect;
    d["unclassified"] = report.unclassified;
    d["correct_pct"] = report.correct_pct;
    d["incorrect_pct"] = report.incorrect_pct;
    d["unclassified_pct"] = report.unclassified_pct;
    d["labels"] = report.matrix.labels;
    d["confusion"] = report.matrix.cells;
    d["unclassified_per_class"] = report.matrix.unclassified;
    d["precision_pct"] = precision;
    d["build_time_s"] = report.build_time_seconds;
    return d;
}

void bind_data(py::module_& m) {
    py::class_<Dataset>(m, "Dataset",
                        "An attribute schema plus the instances that follow it. The last\n"
                        "declared attribute is not special; the class attribute is whichever\n"
                        "one the schema designates.")
        .def("__len__", [](const Dataset& d) { return d.size(); })
        .def("__eq__", [](const Dataset& a, const Dataset& b) { return a == b; }, py::is_operator())
        .def("__repr__",
             [](const Dataset& d) {
                 return "<treekit.Dataset '" + d.schema.relation + "': " +
                        std::to_string(d.size()) + " instances, " +
                        std::to_string(d.schema.attributes.size()) + " attributes>";
             })
        .def_property_readonly(
            "relation", [](const Dataset& d) { return d.schema.relation; },
            "Relation name from the schema.")
        .def_property_readonly(
            "attribute_names",
            [](const Dataset& d) {
                std::vector<std::string> names;
                names.reserve(d.schema.attributes.size());
                for (const auto& a : d.schema.attributes) names.push_back(a.name);
                return names;
            },
            "Attribute names in declared order (the class attribute included).")
        .def_property_readonly(
            "class_name", [](const Dataset& d) { return d.schema.class_attribute().name; },
            "Name of the class attribute.")
        .def_property_readonly(
            "class_labels", [](const Dataset& d) { return d.schema.class_attribute().values; },
            "Declared class values, in order.")
        .def_property_readonly(
            "num_classes", [](const Dataset& d) { return d.schema.num_classes(); },
            "Number of declared class values.")
        .def(
            "attribute_kind",
            [](const Dataset& d, const std::string& name) {
                return attribute_or_throw(d, name).is_nominal() ? "nominal" : "numeric";
            },
            py::arg("name"), "Kind of the named attribute: 'nominal' or 'numeric'.")
        .def(
            "attribute_values",
            [](const Dataset& d, const std::string& name) {
                return attribute_or_throw(d, name).values;
            },
            py::arg("name"),
            "Declared values of the named attribute (empty for numeric attributes).")
        .def(
            "row",
            [](const Dataset& d, std::size_t i) {
                if (i >= d.size()) throw py::index_error("row " + std::to_string(i));
                py::list cells;
                for (std::size_t c = 0; c < d.schema.attributes.size(); ++c) {
                    cells.append(value_to_py(d.instances[i][c], d.schema.attributes[c]));
                }
                return cells;
            },
            py::arg("i"),
            "Cells of instance i in attribute order: str for nominal values,\n"
            "float for numeric values, None for missing cells.")
        .def(
            "class_label",
            [](const Dataset& d, std::size_t i) {
                if (i >= d.size()) throw py::index_error("row " + std::to_string(i));
                return d.schema.class_attribute().values.at(
                    static_cast<std::size_t>(d.class_of(i)));
            },
            py::arg("i"), "Class value of instance i; raises if the class cell is missing.")
        .def(
            "validate",
            [](const Dataset& d) {
                py::list out;
                for (const auto& v : treekit::validate_dataset(d)) {
                    out.append(py::make_tuple(v.row, v.column, v.reason));
                }
                return out;
            },
            "Integrity check. Returns a list of (row, column, reason) tuples,\n"
            "empty when the dataset is clean; row/column are 0-based and -1 for\n"
            "schema-level problems.");

    m.def("load_embedded_students", &treekit::load_embedded_students,
          "The built-in 48-student performance dataset (7 nominal attributes,\n"
          "class = ESM). Each call returns a fresh copy.");
    m.def(
        "parse_arff",
        [](const std::string& text) {
            auto result = treekit::parse_arff(text);
            if (!result.ok()) throw DomainError(join_diagnostics(result));
            return std::move(*result.dataset);
        },
        py::arg("text"),
        "Parses flat ARFF text (nominal value lists, numeric attributes, '%'\n"
        "comments, quoted names, '?' for missing). The last attribute becomes\n"
        "the class. Raises DomainError with a line:column message on failure.");
    m.def(
        "write_arff", [](const Dataset& data) { return treekit::write_arff(data); },
        py::arg("data"),
        "Renders a dataset as ARFF text; parse_arff(write_arff(d)) == d.");
    m.def(
        "discretize_mark",
        [](double pct) { return treekit::discretize_marks(pct, treekit::mark_bins()); },
        py::arg("percent"),
        "Grade category for a subject mark in [0, 100]:\n"
        "Fail < 36, Third 36-44, Second 45-59, First 60+.");
    m.def(
        "discretize_class_test",
        [](double pct) { return treekit::discretize_marks(pct, treekit::class_test_bins()); },
        py::arg("percent"),
        "Class-test category for a percentage: Poor < 40, Average 40-59, Good 60+.");
    m.def(
        "discretize_attendance",
        [](double pct) { return treekit::discretize_marks(pct, treekit::attendance_bins()); },
        py::arg("percent"),
        "Attendance category for a percentage: Poor < 60, Average 60-79, Good 80+.");
}

void bind_metrics(py::module_& m) {
    m.def(
        "class_counts",
        [](const Dataset& data) { return treekit::class_counts(data).counts; },
        py::arg("data"), "Per-class instance counts in declared class-value order.");
    m.def(
        "entropy",
        [](const std::vector<long long>& counts) { return treekit::entropy(ClassCounts{counts}); },
        py::arg("counts"), "Shannon entropy in bits of a class tally.");
    m.def(
        "gini",
        [](const std::vector<long long>& counts) { return treekit::gini(ClassCounts{counts}); },
        py::arg("counts"), "Gini impurity of a class tally.");
    m.def(
        "information_gain",
        [](const Dataset& data, const std::string& attribute) {
            return treekit::information_gain(data, attribute);
        },
        py::arg("data"), py::arg("attribute"),
        "Information gain of the multiway split on a nominal attribute.");
    m.def(
        "split_info",
        [](const Dataset& data, const std::string& attribute) {
            return treekit::split_info(data, attribute);
        },
        py::arg("data"), py::arg("attribute"),
        "Entropy of the partition sizes induced by a nominal attribute.");
    m.def(
        "gain_ratio",
        [](const Dataset& data, const std::string& attribute) {
            return treekit::gain_ratio(data, attribute);
        },
        py::arg("data"), py::arg("attribute"),
        "Information gain over split info, or None when every instance shares\n"
        "one value of the attribute.");
    m.def(
        "binary_gini_decrease",
        [](const Dataset& data, const std::string& attribute,
           const std::vector<std::string>& left_values) {
            return treekit::binary_gini_decrease(data, attribute, left_values);
        },
        py::arg("data"), py::arg("attribute"), py::arg("left_values"),
        "Gini decrease of the binary partition {left_values} vs the remaining\n"
        "declared values of a nominal attribute.");
    m.def(
        "enumerate_binary_partitions",
        [](const Dataset& data, const std::string& attribute) {
            return treekit::enumerate_binary_partitions(attribute_or_throw(data, attribute));
        },
        py::arg("data"), py::arg("attribute"),
        "All candidate left-hand value sets for a binary split on a nominal\n"
        "attribute, one per two-block partition, in canonical order.");
    m.def("pessimistic_error_bound", &treekit::pessimistic_error_bound, py::arg("n"),
          py::arg("e"), py::arg("confidence_factor"),
          "Upper confidence bound on the error count of a leaf that saw n\n"
          "instances and misclassified e of them.");
}

void bind_learning(py::module_& m) {
    py::class_<Model>(m, "Model",
                      "A trained decision tree bound to the schema it was trained on.")
        .def("__repr__",
             [](const Model& model) {
                 return "<treekit.Model " + model.algorithm + ": " +
                        std::to_string(treekit::node_count(*model.tree)) + " nodes, " +
                        std::to_string(treekit::leaf_count(*model.tree)) + " leaves>";
             })
        .def_property_readonly(
            "algorithm", [](const Model& model) { return model.algorithm; },
            "Name of the algorithm that built the tree: 'id3', 'c45' or 'cart'.")
        .def_property_readonly(
            "class_labels",
            [](const Model& model) { return model.schema.class_attribute().values; },
            "Declared class values, in order; distributions follow this order.")
        .def_property_readonly(
            "node_count", [](const Model& model) { return treekit::node_count(*model.tree); },
            "Total nodes in the tree.")
        .def_property_readonly(
            "leaf_count", [](const Model& model) { return treekit::leaf_count(*model.tree); },
            "Leaves in the tree (empty branches included).")
        .def_property_readonly(
            "depth", [](const Model& model) { return treekit::tree_depth(*model.tree); },
            "Longest root-to-leaf edge count; 0 for a lone leaf.")
        .def(
            "classify",
            [](const Model& model, const py::handle& cells) {
                const Instance instance = instance_from_py(cells, model.schema);
                const auto prediction = treekit::classify(*model.tree, model.schema, instance);
                py::object label = py::none();
                if (prediction.label) {
                    label = py::str(model.schema.class_attribute().values.at(
                        static_cast<std::size_t>(*prediction.label)));
                }
                return py::make_tuple(label, prediction.distribution);
            },
            py::arg("cells"),
            "Routes one instance down the tree. cells is a sequence with one\n"
            "entry per attribute (str / float / None); the class cell is ignored\n"
            "and may be None. Returns (label, distribution) where label is None\n"
            "and the distribution is empty for instances that reach an empty\n"
            "branch. Missing values along the routing path raise DomainError.")
        .def(
            "rules",
            [](const Model& model, bool merge) { return treekit::render_rules(model_rules(model, merge)); },
            py::kw_only(), py::arg("merge") = true,
            "IF ... THEN ... text, one rule per leaf in depth-first order. With\n"
            "merge=True (default), same-consequent sibling branches combine into\n"
            "one IN condition; classification behaviour is unchanged.")
        .def(
            "rules_csv",
            [](const Model& model, bool merge) {
                return treekit::render_rules_csv(model_rules(model, merge));
            },
            py::kw_only(), py::arg("merge") = true,
            "antecedent,consequent CSV rows with a header.")
        .def(
            "to_text",
            [](const Model& model) { return treekit::tree_to_text(*model.tree, model.schema); },
            "Indented one-node-per-line rendering of the tree.")
        .def(
            "tree_json",
            [](const Model& model) {
                return treekit::tree_to_json(*model.tree, model.schema).dump(2);
            },
            "The tree as a JSON document (kind, attribute, children, labels,\n"
            "training tallies).");

    m.def(
        "train",
        [](const Dataset& data, const std::string& algorithm, bool pruning, int min_leaf,
           double confidence_factor, int cc_folds, std::uint64_t seed) {
            const auto alg = algorithm_or_throw(algorithm);
            const auto params =
                make_params(pruning, min_leaf, confidence_factor, cc_folds, seed);
            treekit::TreePtr tree = treekit::build_tree(alg, data, params);
            return Model{treekit::to_string(alg), data.schema,
                         std::shared_ptr<const TreeNode>(tree.release())};
        },
        py::arg("data"), py::arg("algorithm") = "id3", py::kw_only(),
        py::arg("pruning") = false, py::arg("min_leaf") = 2,
        py::arg("confidence_factor") = 0.25, py::arg("cc_folds") = 5, py::arg("seed") = 1,
        "Builds a decision tree on the full dataset. algorithm is 'id3'\n"
        "(information gain, multiway, no pruning), 'c45' (gain ratio, numeric\n"
        "thresholds, optional pessimistic pruning) or 'cart' (binary Gini\n"
        "splits, optional cost-complexity pruning). The dataset must be clean\n"
        "and free of missing values. Deterministic for identical inputs.");
}

void bind_evaluation(py::module_& m) {
    m.def(
        "stratified_folds",
        [](const Dataset& data, int k, std::uint64_t seed) {
            return treekit::stratified_folds(data, k, seed).fold_of;
        },
        py::arg("data"), py::arg("k"), py::arg("seed"),
        "Deterministic stratified fold assignment: one fold id per instance.\n"
        "Fold sizes differ by at most one, overall and within each class.");
    m.def(
        "cross_validate",
        [](const Dataset& data, const std::string& algorithm, int k, std::uint64_t seed,
           bool pruning, int min_leaf, double confidence_factor, int cc_folds) {
            const auto alg = algorithm_or_throw(algorithm);
            const auto params = make_params(pruning, min_leaf, confidence_factor, cc_folds, seed);
            const auto report = treekit::cross_validate(alg, data, params, k, seed);
            return report_to_dict(report, pruning);
        },
        py::arg("data"), py::arg("algorithm"), py::kw_only(), py::arg("k") = 10,
        py::arg("seed") = 1, py::arg("pruning") = false, py::arg("min_leaf") = 2,
        py::arg("confidence_factor") = 0.25, py::arg("cc_folds") = 5,
        "Stratified k-fold cross-validation; every instance is scored exactly\n"
        "once by the tree trained on the other folds. Returns a dict with the\n"
        "counts and percentages, the confusion matrix ([actual][predicted]\n"
        "plus per-class unclassified tallies), per-class precision (None for\n"
        "classes never predicted) and the wall-clock time of one full-data\n"
        "training pass. Reproducible bit for bit for identical inputs.");
}

} // namespace

PYBIND11_MODULE(_treekit, m) {
    m.doc() = "Native core of the treekit decision-tree toolkit.";
    m.attr("__version__") = "0.1.0";
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    bind_data(m);
    bind_metrics(m);
    bind_learning(m);
    bind_evaluation(m);
}
