#include "treekit/arff.hpp"

#include "text_util.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace treekit {

namespace {

struct Field {
    std::string value;
    int column = 0; // 1-based start of the token
    bool quoted = false;
};

bool is_ws(char c) { return c == ' ' || c == '\t'; }

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

// Cuts an unquoted '%' comment off a line.
std::string strip_comment(std::string_view line) {
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '\'') quoted = !quoted;
        if (line[i] == '%' && !quoted) return std::string(line.substr(0, i));
    }
    return std::string(line);
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.emplace_back(line);
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return is_ws(c); });
}

class LineError {
public:
    LineError(int column, std::string message) : column_(column), message_(std::move(message)) {}
    int column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    int column_;
    std::string message_;
};

// Reads one token at pos: single-quoted (content between quotes) or bare
// (up to whitespace or one of `stop`). Leaves pos after the token.
Field read_token(const std::string& s, std::size_t& pos, std::string_view stop) {
    Field f;
    f.column = static_cast<int>(pos) + 1;
    if (pos < s.size() && s[pos] == '\'') {
        f.quoted = true;
        const std::size_t close = s.find('\'', pos + 1);
        if (close == std::string::npos)
            throw LineError(f.column, "unterminated quoted value");
        f.value = s.substr(pos + 1, close - pos - 1);
        pos = close + 1;
        return f;
    }
    const std::size_t start = pos;
    while (pos < s.size() && !is_ws(s[pos]) && stop.find(s[pos]) == std::string_view::npos) ++pos;
    f.value = s.substr(start, pos - start);
    return f;
}

void skip_ws(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && is_ws(s[pos])) ++pos;
}

// Comma-separated cells of a data row (or CSV line), with start columns.
std::vector<Field> split_fields(const std::string& s) {
    std::vector<Field> fields;
    std::size_t pos = 0;
    while (true) {
        skip_ws(s, pos);
        const int column = static_cast<int>(pos) + 1;
        if (pos >= s.size()) throw LineError(column, "empty value");
        Field f = read_token(s, pos, ",");
        if (!f.quoted) {
            while (!f.value.empty() && is_ws(f.value.back())) f.value.pop_back();
            if (f.value.empty()) throw LineError(column, "empty value");
        }
        fields.push_back(std::move(f));
        skip_ws(s, pos);
        if (pos >= s.size()) return fields;
        if (s[pos] != ',')
            throw LineError(static_cast<int>(pos) + 1, "unexpected text after value");
        ++pos;
    }
}

Value cell_value(const Field& f, const AttributeSpec& spec) {
    if (!f.quoted && f.value == "?") return Value::missing();
    if (spec.is_nominal()) {
        auto idx = spec.value_index(f.value);
        if (!idx)
            throw LineError(f.column, "undeclared value '" + f.value + "' for attribute '" +
                                          spec.name + "'");
        return Value::nominal(*idx);
    }
    double x = 0.0;
    const char* first = f.value.data();
    const char* last = first + f.value.size();
    auto [end, ec] = std::from_chars(first, last, x);
    if (ec != std::errc() || end != last)
        throw LineError(f.column, "cannot parse '" + f.value + "' as a number");
    return Value::numeric(x);
}

Instance parse_row(const std::string& s, const Schema& schema) {
    const std::vector<Field> fields = split_fields(s);
    if (fields.size() != schema.attributes.size())
        throw LineError(1, "row has " + std::to_string(fields.size()) +
                               " values, schema declares " +
                               std::to_string(schema.attributes.size()));
    Instance inst;
    inst.values.reserve(fields.size());
    for (std::size_t a = 0; a < fields.size(); ++a)
        inst.values.push_back(cell_value(fields[a], schema.attributes[a]));
    return inst;
}

// value list between braces: {v1, v2, ...}
std::vector<std::string> parse_value_list(const std::string& s, std::size_t& pos) {
    const int open_col = static_cast<int>(pos) + 1;
    ++pos; // consume '{'
    std::vector<std::string> values;
    while (true) {
        skip_ws(s, pos);
        if (pos >= s.size()) throw LineError(open_col, "unterminated value list");
        if (s[pos] == '}') {
            ++pos;
            if (values.empty()) throw LineError(open_col, "empty value list");
            return values;
        }
        Field f = read_token(s, pos, ",}");
        if (!f.quoted)
            while (!f.value.empty() && is_ws(f.value.back())) f.value.pop_back();
        if (f.value.empty()) throw LineError(f.column, "empty value in value list");
        if (std::find(values.begin(), values.end(), f.value) != values.end())
            throw LineError(f.column, "duplicate value '" + f.value + "' in value list");
        values.push_back(std::move(f.value));
        skip_ws(s, pos);
        if (pos < s.size() && s[pos] == ',') ++pos;
    }
}

ParseResult failure(int line, const LineError& e) {
    ParseResult r;
    r.diagnostics.push_back({line, e.column(), e.message()});
    return r;
}

ParseResult failure(int line, int column, std::string message) {
    ParseResult r;
    r.diagnostics.push_back({line, column, std::move(message)});
    return r;
}

} // namespace

ParseResult parse_arff(std::string_view text) {
    const std::vector<std::string> raw = split_lines(text);
    Dataset data;
    bool have_relation = false;
    bool have_data = false;

    for (std::size_t li = 0; li < raw.size(); ++li) {
        const int line_no = static_cast<int>(li) + 1;
        const std::string line = strip_comment(raw[li]);
        if (blank(line)) continue;

        try {
            std::size_t pos = 0;
            skip_ws(line, pos);
            if (have_data) {
                if (line[pos] == '{')
                    throw LineError(static_cast<int>(pos) + 1,
                                    "sparse data rows are not supported");
                data.instances.push_back(parse_row(line, data.schema));
                continue;
            }
            if (line[pos] != '@')
                throw LineError(static_cast<int>(pos) + 1,
                                have_relation ? "expected @attribute or @data"
                                              : "expected @relation");
            const Field keyword = read_token(line, pos, "");
            const std::string kw = lower(keyword.value);
            if (kw == "@relation") {
                if (have_relation)
                    throw LineError(keyword.column, "duplicate @relation");
                skip_ws(line, pos);
                if (pos >= line.size())
                    throw LineError(static_cast<int>(pos) + 1, "missing relation name");
                Field name = read_token(line, pos, "");
                data.schema.relation = name.value;
                skip_ws(line, pos);
                if (pos < line.size())
                    throw LineError(static_cast<int>(pos) + 1,
                                    "unexpected text after relation name");
                have_relation = true;
            } else if (kw == "@attribute") {
                if (!have_relation)
                    throw LineError(keyword.column, "@attribute before @relation");
                skip_ws(line, pos);
                if (pos >= line.size())
                    throw LineError(static_cast<int>(pos) + 1, "missing attribute name");
                Field name = read_token(line, pos, "{");
                if (name.value.empty())
                    throw LineError(name.column, "missing attribute name");
                for (const AttributeSpec& existing : data.schema.attributes)
                    if (existing.name == name.value)
                        throw LineError(name.column,
                                        "duplicate attribute name '" + name.value + "'");
                skip_ws(line, pos);
                if (pos >= line.size())
                    throw LineError(static_cast<int>(pos) + 1, "missing attribute type");
                AttributeSpec spec;
                spec.name = name.value;
                if (line[pos] == '{') {
                    spec.kind = AttributeKind::Nominal;
                    spec.values = parse_value_list(line, pos);
                } else {
                    Field type = read_token(line, pos, "");
                    const std::string t = lower(type.value);
                    if (t == "numeric" || t == "real" || t == "integer") {
                        spec.kind = AttributeKind::Numeric;
                    } else if (t == "string" || t == "date") {
                        throw LineError(type.column,
                                        "unsupported attribute type '" + type.value + "'");
                    } else {
                        throw LineError(type.column,
                                        "unknown attribute type '" + type.value + "'");
                    }
                }
                skip_ws(line, pos);
                if (pos < line.size())
                    throw LineError(static_cast<int>(pos) + 1,
                                    "unexpected text after attribute declaration");
                data.schema.attributes.push_back(std::move(spec));
            } else if (kw == "@data") {
                if (data.schema.attributes.empty())
                    throw LineError(keyword.column, "@data before any @attribute");
                skip_ws(line, pos);
                if (pos < line.size())
                    throw LineError(static_cast<int>(pos) + 1, "unexpected text after @data");
                data.schema.class_index = data.schema.attributes.size() - 1;
                have_data = true;
            } else {
                throw LineError(keyword.column, "unknown keyword '" + keyword.value + "'");
            }
        } catch (const LineError& e) {
            return failure(line_no, e);
        }
    }

    const int last_line = static_cast<int>(raw.size());
    if (!have_relation) return failure(std::max(last_line, 1), 1, "missing @relation");
    if (!have_data) return failure(std::max(last_line, 1), 1, "missing @data section");

    ParseResult result;
    result.dataset = std::move(data);
    return result;
}

namespace {

bool needs_quoting(const std::string& s) {
    if (s.empty() || s == "?") return true;
    return s.find_first_of(" \t,{}%") != std::string::npos;
}

std::string render_name(const std::string& s) {
    if (s.find('\'') != std::string::npos)
        throw DomainError("write_arff: single quotes cannot be represented: '" + s + "'");
    return needs_quoting(s) ? "'" + s + "'" : s;
}

} // namespace

std::string write_arff(const Dataset& data) {
    std::string out = "@relation " + render_name(data.schema.relation) + "\n\n";
    for (const AttributeSpec& spec : data.schema.attributes) {
        out += "@attribute " + render_name(spec.name) + " ";
        if (spec.is_nominal()) {
            out += "{";
            for (std::size_t v = 0; v < spec.values.size(); ++v) {
                if (v) out += ",";
                out += render_name(spec.values[v]);
            }
            out += "}\n";
        } else {
            out += "numeric\n";
        }
    }
    out += "@data\n";
    for (const Instance& inst : data.instances) {
        for (std::size_t a = 0; a < inst.size(); ++a) {
            if (a) out += ",";
            const Value& v = inst[a];
            if (v.is_missing())
                out += "?";
            else if (v.is_nominal())
                out += render_name(data.schema.attributes[a].values[v.nominal_index()]);
            else
                out += detail::format_double(v.numeric_value());
        }
        out += "\n";
    }
    return out;
}

ParseResult parse_csv(std::string_view text, const Schema& schema) {
    const std::vector<std::string> lines = split_lines(text);
    Dataset data;
    data.schema = schema;
    bool have_header = false;

    for (std::size_t li = 0; li < lines.size(); ++li) {
        const int line_no = static_cast<int>(li) + 1;
        const std::string& line = lines[li];
        if (blank(line)) continue;
        try {
            if (!have_header) {
                const std::vector<Field> fields = split_fields(line);
                if (fields.size() != schema.attributes.size())
                    throw LineError(1, "header has " + std::to_string(fields.size()) +
                                           " names, schema declares " +
                                           std::to_string(schema.attributes.size()));
                for (std::size_t a = 0; a < fields.size(); ++a)
                    if (fields[a].value != schema.attributes[a].name)
                        throw LineError(fields[a].column, "header name '" + fields[a].value +
                                                              "' does not match attribute '" +
                                                              schema.attributes[a].name + "'");
                have_header = true;
                continue;
            }
            data.instances.push_back(parse_row(line, schema));
        } catch (const LineError& e) {
            return failure(line_no, e);
        }
    }
    if (!have_header)
        return failure(std::max(static_cast<int>(lines.size()), 1), 1, "missing CSV header");

    ParseResult result;
    result.dataset = std::move(data);
    return result;
}

} // namespace treekit
