#pragma once

#include "treekit/data.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace treekit {

// Position of a parse problem; line and column are 1-based and exact for
// single-byte text.
struct ParseDiagnostic {
    int line = 0;
    int column = 0;
    std::string message;
};

struct ParseResult {
    std::optional<Dataset> dataset;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const { return dataset.has_value(); }
};

// Parses the classic flat ARFF subset: @relation, @attribute (nominal value
// lists in braces, or numeric/real/integer), @data with comma-separated rows,
// '%' comments, single-quoted names and values, '?' for missing, keywords
// case-insensitive, LF or CRLF. string/date attributes and sparse data rows
// are rejected with a diagnostic. The last attribute becomes the class.
ParseResult parse_arff(std::string_view text);

// Renders a dataset in the same subset; parse_arff(write_arff(d)) reproduces
// d exactly. Names and values that need quoting are single-quoted; embedded
// single quotes cannot be represented and raise DomainError.
std::string write_arff(const Dataset& data);

// Parses header+rows CSV against a known schema. The header must repeat the
// schema's attribute names in order; rows follow the ARFF cell rules.
ParseResult parse_csv(std::string_view text, const Schema& schema);

} // namespace treekit
