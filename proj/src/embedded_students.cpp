#include "treekit/data.hpp"

#include <array>

namespace treekit {

namespace {

// 48 student records: previous-semester grade, class-test grade, seminar
// performance, assignment submitted, attendance, lab work, end-semester grade.
constexpr int kNumAttrs = 7;

const std::array<const char*, kNumAttrs> kNames = {"PSM", "CTG", "SEM", "ASS",
                                                   "ATT", "LW",  "ESM"};

const std::array<std::array<const char*, kNumAttrs>, 48> kRows = {{
    {"First", "Good", "Good", "Yes", "Good", "Yes", "First"},
    {"First", "Good", "Average", "Yes", "Good", "Yes", "First"},
    {"First", "Good", "Average", "No", "Average", "No", "First"},
    {"First", "Average", "Good", "No", "Good", "Yes", "First"},
    {"First", "Average", "Average", "No", "Good", "Yes", "First"},
    {"First", "Poor", "Average", "No", "Average", "Yes", "First"},
    {"First", "Poor", "Average", "No", "Poor", "Yes", "Second"},
    {"First", "Average", "Poor", "Yes", "Average", "No", "First"},
    {"First", "Poor", "Poor", "No", "Poor", "No", "Third"},
    {"First", "Average", "Average", "Yes", "Good", "No", "First"},
    {"Second", "Good", "Good", "Yes", "Good", "Yes", "First"},
    {"Second", "Good", "Average", "Yes", "Good", "Yes", "First"},
    {"Second", "Good", "Average", "Yes", "Good", "No", "First"},
    {"Second", "Average", "Good", "Yes", "Good", "No", "First"},
    {"Second", "Good", "Average", "Yes", "Average", "Yes", "First"},
    {"Second", "Good", "Average", "Yes", "Poor", "Yes", "Second"},
    {"Second", "Average", "Average", "Yes", "Good", "Yes", "Second"},
    {"Second", "Average", "Average", "Yes", "Poor", "Yes", "Second"},
    {"Second", "Poor", "Average", "No", "Good", "Yes", "Second"},
    {"Second", "Average", "Poor", "Yes", "Average", "Yes", "Second"},
    {"Second", "Poor", "Average", "No", "Poor", "No", "Third"},
    {"Second", "Poor", "Poor", "Yes", "Average", "Yes", "Third"},
    {"Second", "Poor", "Poor", "No", "Average", "Yes", "Third"},
    {"Second", "Poor", "Poor", "Yes", "Good", "Yes", "Second"},
    {"Second", "Poor", "Poor", "Yes", "Poor", "Yes", "Third"},
    {"Second", "Poor", "Poor", "No", "Poor", "Yes", "Fail"},
    {"Third", "Good", "Good", "Yes", "Good", "Yes", "First"},
    {"Third", "Average", "Good", "Yes", "Good", "Yes", "Second"},
    {"Third", "Good", "Average", "Yes", "Good", "Yes", "Second"},
    {"Third", "Good", "Good", "Yes", "Average", "Yes", "Second"},
    {"Third", "Good", "Good", "No", "Good", "Yes", "Second"},
    {"Third", "Average", "Average", "Yes", "Good", "Yes", "Second"},
    {"Third", "Average", "Average", "No", "Average", "Yes", "Third"},
    {"Third", "Average", "Good", "No", "Good", "Yes", "Third"},
    {"Third", "Good", "Average", "No", "Average", "Yes", "Third"},
    {"Third", "Average", "Poor", "No", "Average", "Yes", "Third"},
    {"Third", "Poor", "Average", "Yes", "Average", "Yes", "Third"},
    {"Third", "Poor", "Average", "No", "Poor", "Yes", "Fail"},
    {"Third", "Average", "Average", "No", "Poor", "Yes", "Third"},
    {"Third", "Poor", "Poor", "No", "Good", "No", "Third"},
    {"Third", "Poor", "Poor", "No", "Poor", "Yes", "Fail"},
    {"Third", "Poor", "Poor", "No", "Poor", "No", "Fail"},
    {"Fail", "Good", "Good", "Yes", "Good", "Yes", "Second"},
    {"Fail", "Good", "Good", "Yes", "Average", "Yes", "Second"},
    {"Fail", "Average", "Good", "Yes", "Average", "Yes", "Third"},
    {"Fail", "Poor", "Poor", "Yes", "Average", "No", "Fail"},
    {"Fail", "Good", "Poor", "No", "Poor", "Yes", "Fail"},
    {"Fail", "Poor", "Poor", "No", "Poor", "Yes", "Fail"},
}};

Schema students_schema() {
    Schema schema;
    schema.relation = "students";
    const std::vector<std::string> grades = {"First", "Second", "Third", "Fail"};
    const std::vector<std::string> levels = {"Poor", "Average", "Good"};
    const std::vector<std::string> yesno = {"Yes", "No"};
    schema.attributes = {
        {"PSM", AttributeKind::Nominal, grades},
        {"CTG", AttributeKind::Nominal, levels},
        {"SEM", AttributeKind::Nominal, levels},
        {"ASS", AttributeKind::Nominal, yesno},
        {"ATT", AttributeKind::Nominal, levels},
        {"LW", AttributeKind::Nominal, yesno},
        {"ESM", AttributeKind::Nominal, grades},
    };
    schema.class_index = 6;
    return schema;
}

Dataset build_students() {
    Dataset data;
    data.schema = students_schema();
    data.instances.reserve(kRows.size());
    for (const auto& row : kRows) {
        Instance inst;
        inst.values.reserve(kNumAttrs);
        for (int a = 0; a < kNumAttrs; ++a) {
            auto idx = data.schema.attributes[a].value_index(row[a]);
            if (!idx)
                throw DomainError(std::string("embedded dataset: undeclared value '") + row[a] +
                                  "' for " + kNames[a]);
            inst.values.push_back(Value::nominal(*idx));
        }
        data.instances.push_back(std::move(inst));
    }
    return data;
}

} // namespace

Dataset load_embedded_students() {
    static const Dataset cached = build_students();
    return cached;
}

} // namespace treekit
