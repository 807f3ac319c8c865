#include "treekit/data.hpp"

#include <set>
#include <sstream>

namespace treekit {

std::optional<int> AttributeSpec::value_index(std::string_view value) const {
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] == value) return static_cast<int>(i);
    return std::nullopt;
}

const AttributeSpec& Schema::class_attribute() const {
    if (class_index >= attributes.size())
        throw DomainError("Schema: class_index out of range");
    return attributes[class_index];
}

std::optional<std::size_t> Schema::attribute_index(std::string_view name) const {
    for (std::size_t i = 0; i < attributes.size(); ++i)
        if (attributes[i].name == name) return i;
    return std::nullopt;
}

int Dataset::class_of(std::size_t i) const {
    const Value& v = instances.at(i)[schema.class_index];
    if (v.is_missing())
        throw DomainError("Dataset: missing class value in instance " + std::to_string(i));
    return v.nominal_index();
}

namespace {

void validate_schema(const Schema& schema, std::vector<Violation>& out) {
    auto add = [&out](int col, std::string reason) {
        out.push_back({-1, col, std::move(reason)});
    };

    if (schema.attributes.empty()) {
        add(-1, "schema declares no attributes");
        return;
    }
    if (schema.class_index >= schema.attributes.size()) {
        add(-1, "class index " + std::to_string(schema.class_index) + " out of range");
        return;
    }
    if (schema.attributes.size() < 2)
        add(-1, "schema needs at least one attribute besides the class");

    std::set<std::string> names;
    for (std::size_t a = 0; a < schema.attributes.size(); ++a) {
        const AttributeSpec& spec = schema.attributes[a];
        const int col = static_cast<int>(a);
        if (spec.name.empty())
            add(col, "attribute has an empty name");
        if (!names.insert(spec.name).second)
            add(col, "duplicate attribute name '" + spec.name + "'");
        if (spec.is_nominal()) {
            if (spec.values.empty())
                add(col, "nominal attribute '" + spec.name + "' declares no values");
            std::set<std::string> seen;
            for (const std::string& v : spec.values)
                if (!seen.insert(v).second)
                    add(col, "attribute '" + spec.name + "' declares duplicate value '" + v + "'");
        } else if (!spec.values.empty()) {
            add(col, "numeric attribute '" + spec.name + "' declares nominal values");
        }
    }

    const AttributeSpec& cls = schema.attributes[schema.class_index];
    if (!cls.is_nominal())
        add(static_cast<int>(schema.class_index), "class attribute '" + cls.name + "' must be nominal");
}

} // namespace

std::vector<Violation> validate_dataset(const Dataset& data) {
    std::vector<Violation> out;
    validate_schema(data.schema, out);
    if (!out.empty()) return out; // row checks assume a sane schema

    const Schema& schema = data.schema;
    for (std::size_t r = 0; r < data.instances.size(); ++r) {
        const Instance& inst = data.instances[r];
        const int row = static_cast<int>(r);
        if (inst.size() != schema.attributes.size()) {
            out.push_back({row, -1,
                           "instance has " + std::to_string(inst.size()) + " values, schema declares " +
                               std::to_string(schema.attributes.size())});
            continue;
        }
        for (std::size_t a = 0; a < schema.attributes.size(); ++a) {
            const AttributeSpec& spec = schema.attributes[a];
            const Value& v = inst[a];
            const int col = static_cast<int>(a);
            if (v.is_missing()) {
                if (a == schema.class_index)
                    out.push_back({row, col, "class value is missing"});
                continue;
            }
            if (spec.is_nominal()) {
                if (!v.is_nominal()) {
                    out.push_back({row, col, "numeric value in nominal attribute '" + spec.name + "'"});
                } else if (v.nominal_index() < 0 ||
                           v.nominal_index() >= static_cast<int>(spec.values.size())) {
                    out.push_back({row, col,
                                   "value index " + std::to_string(v.nominal_index()) +
                                       " outside declared values of '" + spec.name + "'"});
                }
            } else if (!v.is_numeric()) {
                out.push_back({row, col, "nominal value in numeric attribute '" + spec.name + "'"});
            }
        }
    }
    return out;
}

std::string discretize_marks(double percent, const GradeBins& bins) {
    if (bins.bins.empty())
        throw DomainError("discretize_marks: no bins for '" + bins.variable + "'");
    if (bins.bins.front().lower != 0.0)
        throw DomainError("discretize_marks: first bin of '" + bins.variable + "' must start at 0");
    for (std::size_t i = 1; i < bins.bins.size(); ++i)
        if (!(bins.bins[i - 1].lower < bins.bins[i].lower))
            throw DomainError("discretize_marks: bin bounds of '" + bins.variable +
                              "' must be strictly increasing");
    if (!(percent >= 0.0 && percent <= 100.0)) {
        std::ostringstream msg;
        msg << "discretize_marks: " << percent << " outside [0,100] for '" << bins.variable << "'";
        throw DomainError(msg.str());
    }
    // Last bin whose lower bound the mark reaches.
    std::size_t chosen = 0;
    for (std::size_t i = 0; i < bins.bins.size(); ++i)
        if (percent >= bins.bins[i].lower) chosen = i;
    return bins.bins[chosen].category;
}

GradeBins mark_bins() {
    return {"marks", {{0.0, "Fail"}, {36.0, "Third"}, {45.0, "Second"}, {60.0, "First"}}};
}

GradeBins class_test_bins() {
    return {"class test", {{0.0, "Poor"}, {40.0, "Average"}, {60.0, "Good"}}};
}

GradeBins attendance_bins() {
    return {"attendance", {{0.0, "Poor"}, {60.0, "Average"}, {80.0, "Good"}}};
}

} // namespace treekit
