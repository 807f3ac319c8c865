#include "treekit/cli.hpp"

#include "text_util.hpp"
#include "treekit/arff.hpp"
#include "treekit/data.hpp"
#include "treekit/eval.hpp"
#include "treekit/learn.hpp"
#include "treekit/rules.hpp"
#include "treekit/tree.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace treekit::cli {

namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

struct CliError {
    int code;
    std::string message;
};

struct Options {
    std::string data;
    std::string model;
    std::string algorithm;                // train / rules / predict override
    std::vector<std::string> algorithms;  // compare
    int k = 10;
    std::uint64_t seed = 1;
    std::string pruning = "off";
    std::string output = "-";
    std::string format = "text";
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{kDataError, "cannot open '" + path + "'"};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw CliError{kDataError, "cannot read '" + path + "'"};
    return buffer.str();
}

// All file output lands via a temp file + rename, so a failed run never
// leaves a partial artifact behind.
void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path == "-") {
        out << content;
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw CliError{kDataError, "cannot write '" + tmp + "'"};
        f << content;
        f.flush();
        if (!f) {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw CliError{kDataError, "cannot write '" + tmp + "'"};
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        std::filesystem::remove(tmp, ignored);
        throw CliError{kDataError, "cannot move output into place at '" + path + "'"};
    }
}

std::string describe(const ParseDiagnostic& d, const std::string& source) {
    return source + ":" + std::to_string(d.line) + ":" + std::to_string(d.column) + ": " +
           d.message;
}

Dataset load_training_data(const std::string& spec) {
    if (spec == "@embedded") return load_embedded_students();
    const std::string text = read_file(spec);
    ParseResult parsed = parse_arff(text);
    if (!parsed.ok())
        throw CliError{kDataError, describe(parsed.diagnostics.front(), spec)};
    auto violations = validate_dataset(*parsed.dataset);
    if (!violations.empty())
        throw CliError{kDataError, spec + ": " + violations.front().reason};
    return std::move(*parsed.dataset);
}

Algorithm parse_algorithm(const std::string& name) {
    auto algorithm = algorithm_from_string(name);
    if (!algorithm)
        throw CliError{kUsageError,
                       "unknown algorithm '" + name + "' (expected id3, c45 or cart)"};
    return *algorithm;
}

// canonical order, duplicates removed
std::vector<Algorithm> parse_algorithms(const std::vector<std::string>& names) {
    bool wanted[3] = {false, false, false};
    for (const std::string& n : names) wanted[static_cast<int>(parse_algorithm(n))] = true;
    std::vector<Algorithm> out;
    for (Algorithm a : {Algorithm::Id3, Algorithm::C45, Algorithm::Cart})
        if (wanted[static_cast<int>(a)]) out.push_back(a);
    if (out.empty()) out = {Algorithm::Id3, Algorithm::C45, Algorithm::Cart};
    return out;
}

LearnerParams make_params(const Options& opt) {
    LearnerParams params;
    params.pruning = opt.pruning == "on";
    params.seed = opt.seed;
    return params;
}

void check_k(const Options& opt, const Dataset& data) {
    if (opt.k < 2 || opt.k > static_cast<int>(data.size()))
        throw CliError{kUsageError, "k must be in [2, " + std::to_string(data.size()) +
                                        "], got " + std::to_string(opt.k)};
}

// --- model document ---------------------------------------------------------

nlohmann::json schema_to_json(const Schema& schema) {
    nlohmann::json attrs = nlohmann::json::array();
    for (const AttributeSpec& a : schema.attributes) {
        nlohmann::json spec;
        spec["name"] = a.name;
        spec["kind"] = a.is_nominal() ? "nominal" : "numeric";
        if (a.is_nominal()) spec["values"] = a.values;
        attrs.push_back(std::move(spec));
    }
    return {{"relation", schema.relation},
            {"attributes", std::move(attrs)},
            {"class_index", schema.class_index}};
}

Schema schema_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("attributes") || !doc["attributes"].is_array())
        throw DomainError("model schema: missing attribute list");
    Schema schema;
    if (doc.contains("relation") && doc["relation"].is_string())
        schema.relation = doc["relation"].get<std::string>();
    for (const auto& a : doc["attributes"]) {
        AttributeSpec spec;
        if (!a.contains("name") || !a["name"].is_string())
            throw DomainError("model schema: attribute without a name");
        spec.name = a["name"].get<std::string>();
        const std::string kind = a.value("kind", "nominal");
        if (kind == "nominal") {
            spec.kind = AttributeKind::Nominal;
            if (!a.contains("values") || !a["values"].is_array())
                throw DomainError("model schema: nominal attribute '" + spec.name +
                                  "' without values");
            for (const auto& v : a["values"]) {
                if (!v.is_string()) throw DomainError("model schema: non-string value");
                spec.values.push_back(v.get<std::string>());
            }
        } else if (kind == "numeric") {
            spec.kind = AttributeKind::Numeric;
        } else {
            throw DomainError("model schema: unknown attribute kind '" + kind + "'");
        }
        schema.attributes.push_back(std::move(spec));
    }
    if (!doc.contains("class_index") || !doc["class_index"].is_number_unsigned())
        throw DomainError("model schema: missing class_index");
    schema.class_index = doc["class_index"].get<std::size_t>();
    if (schema.class_index >= schema.attributes.size())
        throw DomainError("model schema: class_index out of range");
    return schema;
}

nlohmann::json model_to_json(Algorithm algorithm, const LearnerParams& params,
                             const Schema& schema, const TreeNode& tree) {
    return {{"format", "treekit-model"},
            {"version", 1},
            {"algorithm", to_string(algorithm)},
            {"params",
             {{"min_leaf", params.min_leaf},
              {"confidence_factor", params.confidence_factor},
              {"cc_folds", params.cc_folds},
              {"seed", params.seed},
              {"pruning", params.pruning}}},
            {"schema", schema_to_json(schema)},
            {"tree", tree_to_json(tree, schema)}};
}

struct Model {
    std::string algorithm;
    Schema schema;
    TreePtr tree;
};

Model model_from_file(const std::string& path) {
    const std::string text = read_file(path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw CliError{kDataError, path + ": not valid JSON: " + e.what()};
    }
    try {
        if (!doc.is_object() || doc.value("format", "") != "treekit-model")
            throw DomainError("not a treekit model document");
        Model model;
        model.algorithm = doc.value("algorithm", "");
        model.schema = schema_from_json(doc.at("schema"));
        if (!doc.contains("tree")) throw DomainError("model document: missing tree");
        model.tree = tree_from_json(doc["tree"], model.schema);
        return model;
    } catch (const std::exception& e) {
        throw CliError{kDataError, path + ": " + e.what()};
    }
}

// --- report rendering ---------------------------------------------------------

std::string pad(const std::string& s, std::size_t width, bool right = false) {
    if (s.size() >= width) return s;
    const std::string fill(width - s.size(), ' ');
    return right ? fill + s : s + fill;
}

std::string render_reports_text(const std::vector<EvaluationReport>& reports,
                                const Options& opt) {
    std::string out = "Stratified " + std::to_string(opt.k) + "-fold cross-validation (seed " +
                      std::to_string(opt.seed) + ", pruning " + opt.pruning + ")\n\n";
    out += pad("algorithm", 11) + pad("correct%", 12, true) + pad("incorrect%", 13, true) +
           pad("unclassified%", 16, true) + pad("build_time_s", 15, true) + "\n";
    for (const EvaluationReport& r : reports) {
        out += pad(r.algorithm, 11) + pad(detail::format_fixed(r.correct_pct, 4), 12, true) +
               pad(detail::format_fixed(r.incorrect_pct, 4), 13, true) +
               pad(detail::format_fixed(r.unclassified_pct, 4), 16, true) +
               pad(detail::format_fixed(r.build_time_seconds, 3), 15, true) + "\n";
    }
    for (const EvaluationReport& r : reports) {
        out += "\n" + r.algorithm + ": confusion matrix (rows actual, columns predicted)\n";
        std::size_t label_w = std::string("actual").size();
        for (const std::string& l : r.matrix.labels) label_w = std::max(label_w, l.size());
        out += pad("actual", label_w + 2);
        for (const std::string& l : r.matrix.labels) out += pad(l, l.size() + 2, true);
        out += pad("unclassified", 14, true) + pad("precision%", 12, true) + "\n";
        for (std::size_t a = 0; a < r.matrix.labels.size(); ++a) {
            out += pad(r.matrix.labels[a], label_w + 2);
            for (std::size_t p = 0; p < r.matrix.labels.size(); ++p)
                out += pad(std::to_string(r.matrix.cells[a][p]), r.matrix.labels[p].size() + 2,
                           true);
            out += pad(std::to_string(r.matrix.unclassified[a]), 14, true);
            out += pad(r.precision[a] ? detail::format_fixed(*r.precision[a], 1) : "-", 12, true);
            out += "\n";
        }
    }
    return out;
}

std::string render_reports_csv(const std::vector<EvaluationReport>& reports) {
    std::string out = summary_csv_header() + "\n";
    for (const EvaluationReport& r : reports) out += summary_csv_row(r) + "\n";
    return out;
}

nlohmann::json report_to_json(const EvaluationReport& r) {
    nlohmann::json precision = nlohmann::json::array();
    for (const auto& p : r.precision)
        precision.push_back(p ? nlohmann::json(*p) : nlohmann::json(nullptr));
    return {{"algorithm", r.algorithm},
            {"matrix",
             {{"labels", r.matrix.labels},
              {"cells", r.matrix.cells},
              {"unclassified", r.matrix.unclassified}}},
            {"correct", r.correct},
            {"incorrect", r.incorrect},
            {"unclassified", r.unclassified},
            {"correct_pct", r.correct_pct},
            {"incorrect_pct", r.incorrect_pct},
            {"unclassified_pct", r.unclassified_pct},
            {"precision", std::move(precision)},
            {"build_time_s", std::round(r.build_time_seconds * 1000.0) / 1000.0},
            {"k", r.k},
            {"seed", r.seed}};
}

std::string render_reports_json(const std::vector<EvaluationReport>& reports,
                                const Options& opt) {
    nlohmann::json doc = {{"k", opt.k},
                          {"seed", opt.seed},
                          {"pruning", opt.pruning == "on"},
                          {"reports", nlohmann::json::array()}};
    for (const EvaluationReport& r : reports) doc["reports"].push_back(report_to_json(r));
    return doc.dump(2) + "\n";
}

// Grouped bar chart, 800x480, three bars (correct / incorrect / unclassified
// percent) per algorithm. Pure string assembly: identical runs render
// identical bytes.
std::string render_reports_svg(const std::vector<EvaluationReport>& reports,
                               const Options& opt) {
    const double width = 800, height = 480;
    const double left = 64, right = 24, top = 72, bottom = 56;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;
    auto x_of = [&](double g, double slot, double slots_per_group, double groups) {
        const double group_w = plot_w / groups;
        const double bar_w = group_w / (slots_per_group + 1.5);
        return left + g * group_w + (slot + 0.75) * bar_w;
    };
    auto y_of = [&](double pct) { return top + plot_h * (1.0 - pct / 100.0); };
    auto num = [](double v) { return detail::format_fixed(v, 2); };

    const char* colors[3] = {"#2e7d32", "#c62828", "#757575"};
    const char* names[3] = {"correct", "incorrect", "unclassified"};

    std::string svg =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"480\" "
        "viewBox=\"0 0 800 480\">\n"
        "<rect width=\"800\" height=\"480\" fill=\"#ffffff\"/>\n"
        "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        "font-size=\"16\">Stratified " +
        std::to_string(opt.k) + "-fold cross-validation (seed " + std::to_string(opt.seed) +
        ", pruning " + opt.pruning + ")</text>\n";

    for (int grid = 0; grid <= 100; grid += 20) {
        const double y = y_of(grid);
        svg += "<line x1=\"" + num(left) + "\" y1=\"" + num(y) + "\" x2=\"" + num(left + plot_w) +
               "\" y2=\"" + num(y) + "\" stroke=\"#dddddd\"/>\n";
        svg += "<text x=\"" + num(left - 8) + "\" y=\"" + num(y + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
               std::to_string(grid) + "</text>\n";
    }

    const double groups = static_cast<double>(reports.size());
    for (std::size_t g = 0; g < reports.size(); ++g) {
        const EvaluationReport& r = reports[g];
        const double pcts[3] = {r.correct_pct, r.incorrect_pct, r.unclassified_pct};
        const double group_w = plot_w / groups;
        const double bar_w = group_w / 4.5;
        for (int s = 0; s < 3; ++s) {
            const double x = x_of(static_cast<double>(g), s, 3, groups);
            const double y = y_of(pcts[s]);
            svg += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(bar_w) +
                   "\" height=\"" + num(y_of(0) - y) + "\" fill=\"" + colors[s] + "\"/>\n";
            svg += "<text x=\"" + num(x + bar_w / 2) + "\" y=\"" + num(y - 4) +
                   "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" +
                   detail::format_fixed(pcts[s], 1) + "</text>\n";
        }
        svg += "<text x=\"" + num(left + (g + 0.5) * group_w) + "\" y=\"" +
               num(top + plot_h + 20) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
               r.algorithm + "</text>\n";
    }

    double lx = left;
    for (int s = 0; s < 3; ++s) {
        svg += "<rect x=\"" + num(lx) + "\" y=\"44\" width=\"12\" height=\"12\" fill=\"" +
               colors[s] + "\"/>\n";
        svg += "<text x=\"" + num(lx + 16) + "\" y=\"54\" font-family=\"sans-serif\" "
               "font-size=\"12\">" +
               names[s] + " %</text>\n";
        lx += 130;
    }
    svg += "<line x1=\"" + num(left) + "\" y1=\"" + num(top) + "\" x2=\"" + num(left) +
           "\" y2=\"" + num(top + plot_h) + "\" stroke=\"#333333\"/>\n";
    svg += "<line x1=\"" + num(left) + "\" y1=\"" + num(top + plot_h) + "\" x2=\"" +
           num(left + plot_w) + "\" y2=\"" + num(top + plot_h) + "\" stroke=\"#333333\"/>\n";
    svg += "</svg>\n";
    return svg;
}

// --- subcommands ---------------------------------------------------------------

int run_train(const Options& opt, std::ostream& out) {
    if (opt.format != "text" && opt.format != "json")
        throw CliError{kUsageError, "train supports --format text or json"};
    const Dataset data = load_training_data(opt.data);
    const Algorithm algorithm = parse_algorithm(opt.algorithm);
    const LearnerParams params = make_params(opt);
    const TreePtr tree = build_tree(algorithm, data, params);
    const std::string model =
        model_to_json(algorithm, params, data.schema, *tree).dump(2) + "\n";
    write_output(opt.output, model, out);
    if (opt.output != "-") out << tree_to_text(*tree, data.schema);
    return 0;
}

int run_rules(const Options& opt, std::ostream& out) {
    const Dataset data = load_training_data(opt.data);
    const Algorithm algorithm = parse_algorithm(opt.algorithm);
    const TreePtr tree = build_tree(algorithm, data, make_params(opt));
    const RuleSet rules = extract_rules(*tree, data.schema);
    std::string rendered;
    if (opt.format == "text") {
        rendered = render_rules(rules);
    } else if (opt.format == "csv") {
        rendered = render_rules_csv(rules);
    } else if (opt.format == "json") {
        nlohmann::json doc = nlohmann::json::array();
        for (const Rule& rule : rules.rules) {
            RuleSet one{rules.schema, {rule}};
            const std::string line = render_rules(one);
            doc.push_back(
                {{"antecedent", line.substr(3, line.find(" THEN ") - 3)},
                 {"consequent", rule.consequent
                                    ? nlohmann::json(
                                          rules.schema.class_attribute().values[*rule.consequent])
                                    : nlohmann::json(nullptr)}});
        }
        rendered = doc.dump(2) + "\n";
    } else {
        throw CliError{kUsageError, "rules supports --format text, csv or json"};
    }
    write_output(opt.output, rendered, out);
    return 0;
}

int run_predict(const Options& opt, std::ostream& out) {
    if (opt.format == "svg") throw CliError{kUsageError, "predict does not support --format svg"};
    const Model model = model_from_file(opt.model);

    const std::string text = read_file(opt.data);
    Dataset instances;
    const std::size_t first_mark = text.find_first_not_of(" \t\r\n");
    const bool looks_arff = first_mark != std::string::npos &&
                            (text[first_mark] == '@' || text[first_mark] == '%');
    if (looks_arff) {
        ParseResult parsed = parse_arff(text);
        if (!parsed.ok())
            throw CliError{kDataError, describe(parsed.diagnostics.front(), opt.data)};
        const Schema& got = parsed.dataset->schema;
        if (got.attributes.size() != model.schema.attributes.size() ||
            got.class_index != model.schema.class_index)
            throw CliError{kUsageError, opt.data + ": schema shape does not match the model"};
        for (std::size_t a = 0; a < got.attributes.size(); ++a)
            if (got.attributes[a] != model.schema.attributes[a])
                throw CliError{kUsageError, opt.data + ": attribute '" + got.attributes[a].name +
                                                "' does not match the model's attribute '" +
                                                model.schema.attributes[a].name + "'"};
        instances = std::move(*parsed.dataset);
    } else {
        // headered CSV validated against the model's schema; any mismatch
        // (names, undeclared values) is a usage error
        ParseResult parsed = parse_csv(text, model.schema);
        if (!parsed.ok())
            throw CliError{kUsageError, describe(parsed.diagnostics.front(), opt.data)};
        instances = std::move(*parsed.dataset);
    }

    std::vector<Prediction> predictions;
    predictions.reserve(instances.size());
    for (std::size_t i = 0; i < instances.size(); ++i) {
        try {
            predictions.push_back(classify(*model.tree, model.schema, instances.instances[i]));
        } catch (const DomainError& e) {
            throw CliError{kUsageError,
                           opt.data + ": instance " + std::to_string(i + 1) + ": " + e.what()};
        }
    }

    const std::vector<std::string>& labels = model.schema.class_attribute().values;
    std::string rendered;
    if (opt.format == "json") {
        nlohmann::json doc = nlohmann::json::array();
        for (const Prediction& p : predictions)
            doc.push_back({{"label", p.classified() ? nlohmann::json(labels[*p.label])
                                                    : nlohmann::json(nullptr)},
                           {"distribution", p.distribution}});
        rendered = doc.dump(2) + "\n";
    } else if (opt.format == "csv") {
        rendered = "prediction";
        for (const std::string& l : labels) rendered += "," + l;
        rendered += "\n";
        for (const Prediction& p : predictions) {
            rendered += p.classified() ? labels[*p.label] : "UNCLASSIFIED";
            for (std::size_t c = 0; c < labels.size(); ++c)
                rendered +=
                    "," + (p.classified() ? detail::format_double(p.distribution[c]) : "");
            rendered += "\n";
        }
    } else {
        for (const Prediction& p : predictions) {
            if (!p.classified()) {
                rendered += "UNCLASSIFIED\n";
                continue;
            }
            rendered += labels[*p.label] + " [";
            for (std::size_t c = 0; c < p.distribution.size(); ++c) {
                if (c) rendered += ", ";
                rendered += detail::format_double(p.distribution[c]);
            }
            rendered += "]\n";
        }
    }
    write_output(opt.output, rendered, out);
    return 0;
}

int run_compare(const Options& opt, std::ostream& out) {
    const Dataset data = load_training_data(opt.data);
    check_k(opt, data);
    const std::vector<Algorithm> algorithms = parse_algorithms(opt.algorithms);
    const LearnerParams params = make_params(opt);

    std::vector<EvaluationReport> reports;
    reports.reserve(algorithms.size());
    for (Algorithm a : algorithms)
        reports.push_back(cross_validate(a, data, params, opt.k, opt.seed));

    std::string rendered;
    if (opt.format == "text")
        rendered = render_reports_text(reports, opt);
    else if (opt.format == "csv")
        rendered = render_reports_csv(reports);
    else if (opt.format == "json")
        rendered = render_reports_json(reports, opt);
    else if (opt.format == "svg")
        rendered = render_reports_svg(reports, opt);
    else
        throw CliError{kUsageError, "unknown format '" + opt.format + "'"};
    write_output(opt.output, rendered, out);
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"decision tree toolkit: ID3 / C4.5 / CART with stratified cross-validation"};
    app.name("treekit");
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool with_k) {
        cmd->add_option("--seed", opt.seed, "random seed")->capture_default_str();
        cmd->add_option("--pruning", opt.pruning, "pruning (on|off)")
            ->check(CLI::IsMember({"on", "off"}))
            ->capture_default_str();
        cmd->add_option("--output", opt.output, "output path, - for stdout")
            ->capture_default_str();
        cmd->add_option("--format", opt.format, "text|csv|json|svg")
            ->check(CLI::IsMember({"text", "csv", "json", "svg"}))
            ->capture_default_str();
        if (with_k) cmd->add_option("--k", opt.k, "number of folds")->capture_default_str();
    };

    CLI::App* train = app.add_subcommand("train", "train one tree, write the model document");
    train->add_option("data", opt.data, "ARFF file or @embedded")->required();
    train->add_option("--algorithm", opt.algorithm, "id3|c45|cart")->required();
    add_common(train, false);

    CLI::App* predict = app.add_subcommand("predict", "classify instances with a trained model");
    predict->add_option("data", opt.data, "instance file (ARFF or headered CSV)")->required();
    predict->add_option("--model", opt.model, "model document from train")->required();
    add_common(predict, false);

    CLI::App* rules = app.add_subcommand("rules", "extract IF-THEN rules from a trained tree");
    rules->add_option("data", opt.data, "ARFF file or @embedded")->required();
    rules->add_option("--algorithm", opt.algorithm, "id3|c45|cart")->required();
    add_common(rules, false);

    CLI::App* compare =
        app.add_subcommand("compare", "cross-validate algorithms and report the comparison");
    compare->add_option("data", opt.data, "ARFF file or @embedded")->required();
    compare->add_option("--algorithms", opt.algorithms, "subset of id3,c45,cart")
        ->delimiter(',');
    add_common(compare, true);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : kUsageError;
    }

    try {
        if (train->parsed()) return run_train(opt, out);
        if (predict->parsed()) return run_predict(opt, out);
        if (rules->parsed()) return run_rules(opt, out);
        return run_compare(opt, out);
    } catch (const CliError& e) {
        err << "error: " << e.message << "\n";
        return e.code;
    } catch (const UnsupportedAttributeError& e) {
        err << "error: " << e.what() << "\n";
        return kDataError;
    } catch (const UnsupportedMissingError& e) {
        err << "error: " << e.what() << "\n";
        return kDataError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kDataError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kDataError;
    }
    return 0;
}

} // namespace treekit::cli
