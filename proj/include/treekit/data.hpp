#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace treekit {

// Raised for contract violations on otherwise well-formed inputs
// (out-of-range marks, malformed schemas, empty training sets, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when a learner or metric meets an attribute type it does not support
// (e.g. information gain over a numeric attribute).
struct UnsupportedAttributeError : DomainError {
    using DomainError::DomainError;
};

// Raised when an operation that requires complete data meets a missing value.
struct UnsupportedMissingError : DomainError {
    using DomainError::DomainError;
};

enum class AttributeKind { Nominal, Numeric };

// A single cell: missing, a nominal value (index into the attribute's
// declared value list), or a numeric value.
class Value {
public:
    Value() = default; // missing

    static Value missing() { return Value(); }
    static Value nominal(int index) {
        Value v;
        v.kind_ = Kind::Nominal;
        v.nominal_ = index;
        return v;
    }
    static Value numeric(double x) {
        Value v;
        v.kind_ = Kind::Numeric;
        v.numeric_ = x;
        return v;
    }

    bool is_missing() const { return kind_ == Kind::Missing; }
    bool is_nominal() const { return kind_ == Kind::Nominal; }
    bool is_numeric() const { return kind_ == Kind::Numeric; }

    // Callers must check the kind first; wrong-kind access is a logic error.
    int nominal_index() const {
        if (!is_nominal()) throw DomainError("Value: not a nominal value");
        return nominal_;
    }
    double numeric_value() const {
        if (!is_numeric()) throw DomainError("Value: not a numeric value");
        return numeric_;
    }

    bool operator==(const Value& o) const {
        if (kind_ != o.kind_) return false;
        switch (kind_) {
            case Kind::Missing: return true;
            case Kind::Nominal: return nominal_ == o.nominal_;
            case Kind::Numeric: return numeric_ == o.numeric_;
        }
        return false;
    }
    bool operator!=(const Value& o) const { return !(*this == o); }

private:
    enum class Kind { Missing, Nominal, Numeric };
    Kind kind_ = Kind::Missing;
    int nominal_ = -1;
    double numeric_ = 0.0;
};

struct AttributeSpec {
    std::string name;
    AttributeKind kind = AttributeKind::Nominal;
    std::vector<std::string> values; // declared order; nominal only

    bool is_nominal() const { return kind == AttributeKind::Nominal; }

    // Index of `value` in the declared list, or nullopt if undeclared.
    std::optional<int> value_index(std::string_view value) const;

    bool operator==(const AttributeSpec&) const = default;
};

struct Schema {
    std::string relation = "dataset";
    std::vector<AttributeSpec> attributes;
    std::size_t class_index = 0;

    const AttributeSpec& class_attribute() const;
    std::optional<std::size_t> attribute_index(std::string_view name) const;
    std::size_t num_classes() const { return class_attribute().values.size(); }

    bool operator==(const Schema&) const = default;
};

struct Instance {
    std::vector<Value> values; // one per schema attribute

    const Value& operator[](std::size_t i) const { return values[i]; }
    Value& operator[](std::size_t i) { return values[i]; }
    std::size_t size() const { return values.size(); }

    bool operator==(const Instance&) const = default;
};

struct Dataset {
    Schema schema;
    std::vector<Instance> instances;

    std::size_t size() const { return instances.size(); }
    bool empty() const { return instances.empty(); }

    // Nominal class index of instance i; throws if missing or non-nominal.
    int class_of(std::size_t i) const;

    bool operator==(const Dataset&) const = default;
};

// One integrity violation found by validate_dataset. row/column are 0-based;
// -1 means the violation is schema-level rather than tied to a cell.
struct Violation {
    int row = -1;
    int column = -1;
    std::string reason;
};

// Full integrity check: schema well-formedness (nominal class with at least
// one value, at least one non-class attribute, unique attribute names,
// non-empty and duplicate-free nominal value lists) and per-row checks
// (arity, value kind matches attribute kind, nominal indices in range,
// class present). Returns every violation found, in row order.
std::vector<Violation> validate_dataset(const Dataset& data);

// Threshold-based discretization of a 0..100 mark into ordered categories.
// bins are half-open [lower, next lower): a mark belongs to the last bin
// whose lower bound it reaches. The first lower bound must be 0 and bounds
// must be strictly increasing.
struct GradeBins {
    struct Bin {
        double lower = 0.0;
        std::string category;
    };
    std::string variable;
    std::vector<Bin> bins;
};

// Maps percent in [0,100] to its bin's category; throws DomainError outside
// the range or for ill-formed bins.
std::string discretize_marks(double percent, const GradeBins& bins);

// The grade boundaries used by the embedded student dataset.
GradeBins mark_bins();       // PSM/ESM: Fail <36, Third 36..44, Second 45..59, First 60+
GradeBins class_test_bins(); // CTG: Poor <40, Average 40..59, Good 60+
GradeBins attendance_bins(); // ATT: Poor <60, Average 60..79, Good 80+

// The 48-student performance dataset (7 nominal attributes, class = ESM).
// Each call returns a structurally identical copy.
Dataset load_embedded_students();

} // namespace treekit
