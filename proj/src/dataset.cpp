#include "rbccr/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <unordered_map>

#include "rbccr/random.hpp"

namespace rbccr {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string lowercase(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) {
        if (cur.back() == '\r') cur.pop_back();
        lines.push_back(cur);
    }
    return lines;
}

std::vector<std::string> split_commas(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(trim(cur));
    return out;
}

// One RFC-4180-style record: quoted fields may contain commas and doubled
// quotes. Values never contain newlines in this domain, so records are lines.
std::vector<std::string> split_csv_record(const std::string& line, std::size_t lineno) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (quoted) throw ParseError(lineno, "unterminated quoted field");
    out.push_back(cur);
    return out;
}

bool parse_number(const std::string& s, double& out) {
    const std::string t = trim(s);
    if (t.empty()) return false;
    const char* begin = t.data();
    const char* end = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

enum class AttrType { numeric, categorical };

struct KeelAttribute {
    std::string name;
    AttrType type = AttrType::numeric;
};

// Picks the minority label, breaking an exact count tie toward the
// lexicographically smaller label.
void finish_dataset(Dataset& d, std::size_t first_data_line) {
    std::map<std::string, std::size_t> counts;
    for (const auto& l : d.labels) ++counts[l];
    if (counts.size() < 2)
        throw ParseError(first_data_line, "fewer than two classes present");
    if (counts.size() > 2)
        throw ParseError(first_data_line,
                         "more than two classes present (" + std::to_string(counts.size()) + ")");
    auto it = counts.begin();
    const auto& [label_a, count_a] = *it;
    const auto& [label_b, count_b] = *std::next(it);
    if (count_a < count_b) d.minority_label = label_a;
    else if (count_b < count_a) d.minority_label = label_b;
    else d.minority_label = std::min(label_a, label_b);
    validate(d);
}

} // namespace

std::size_t Dataset::minority_count() const {
    std::size_t c = 0;
    for (const auto& l : labels)
        if (l == minority_label) ++c;
    return c;
}

std::string Dataset::majority_label() const {
    for (const auto& l : labels)
        if (l != minority_label) return l;
    return {};
}

double Dataset::imbalance_ratio() const {
    const std::size_t min_count = minority_count();
    return min_count == 0 ? 0.0 : static_cast<double>(size() - min_count) / min_count;
}

std::vector<int> Dataset::binary_labels() const {
    std::vector<int> y(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) y[i] = labels[i] == minority_label ? 1 : 0;
    return y;
}

void validate(const Dataset& d) {
    if (d.size() < 2) throw std::invalid_argument("dataset: fewer than 2 samples");
    if (d.num_features() < 1) throw std::invalid_argument("dataset: no features");
    if (d.labels.size() != d.size())
        throw std::invalid_argument("dataset: label/feature row count mismatch");
    std::map<std::string, std::size_t> counts;
    for (const auto& l : d.labels) ++counts[l];
    if (counts.size() != 2) throw std::invalid_argument("dataset: expected exactly two classes");
    if (counts.find(d.minority_label) == counts.end())
        throw std::invalid_argument("dataset: minority label not present");
    const std::size_t min_count = counts.at(d.minority_label);
    if (min_count > d.size() - min_count)
        throw std::invalid_argument("dataset: minority class larger than majority");
    for (std::size_t i = 0; i < d.features.rows(); ++i)
        for (std::size_t j = 0; j < d.features.cols(); ++j)
            if (!std::isfinite(d.features(i, j)))
                throw std::invalid_argument("dataset: non-finite feature value");
}

Dataset parse_keel(const std::string& text, const std::string& name) {
    const auto lines = split_lines(text);
    std::vector<KeelAttribute> attributes;
    std::vector<std::string> inputs, outputs;
    std::string relation = name;
    std::size_t data_start = 0;
    bool saw_data = false;

    std::size_t lineno = 0;
    for (; lineno < lines.size(); ++lineno) {
        const std::string line = trim(lines[lineno]);
        if (line.empty() || line[0] == '%') continue;
        if (line[0] != '@')
            throw ParseError(lineno + 1, "expected @-header line before data section");
        std::istringstream iss(line);
        std::string keyword;
        iss >> keyword;
        keyword = lowercase(keyword);
        if (keyword == "@relation") {
            std::string rest;
            std::getline(iss, rest);
            rest = trim(rest);
            if (!rest.empty()) relation = rest;
        } else if (keyword == "@attribute") {
            std::string rest;
            std::getline(iss, rest);
            rest = trim(rest);
            if (rest.empty()) throw ParseError(lineno + 1, "malformed @attribute: missing name");
            // Name ends at whitespace, '{' or '['.
            std::size_t pos = 0;
            while (pos < rest.size() && !std::isspace(static_cast<unsigned char>(rest[pos])) &&
                   rest[pos] != '{' && rest[pos] != '[')
                ++pos;
            KeelAttribute attr;
            attr.name = rest.substr(0, pos);
            std::string spec = lowercase(trim(rest.substr(pos)));
            if (spec.empty() || spec[0] == '{') {
                attr.type = AttrType::categorical;
            } else if (spec.rfind("real", 0) == 0 || spec.rfind("numeric", 0) == 0 ||
                       spec.rfind("integer", 0) == 0) {
                attr.type = AttrType::numeric;
            } else if (spec[0] == '[') {
                attr.type = AttrType::numeric;
            } else {
                throw ParseError(lineno + 1, "unknown attribute type for '" + attr.name + "'");
            }
            attributes.push_back(attr);
        } else if (keyword == "@inputs") {
            std::string rest;
            std::getline(iss, rest);
            inputs = split_commas(trim(rest));
        } else if (keyword == "@outputs" || keyword == "@output") {
            std::string rest;
            std::getline(iss, rest);
            outputs = split_commas(trim(rest));
        } else if (keyword == "@data") {
            saw_data = true;
            data_start = lineno + 1;
            break;
        } else {
            throw ParseError(lineno + 1, "unknown header keyword '" + keyword + "'");
        }
    }
    if (!saw_data) throw ParseError(lines.size(), "missing @data section");
    if (attributes.size() < 2)
        throw ParseError(data_start, "need at least two attributes (features + class)");

    // Class attribute: the @outputs one when given, else the last attribute.
    std::size_t class_idx = attributes.size() - 1;
    if (!outputs.empty()) {
        if (outputs.size() != 1)
            throw ParseError(data_start, "expected a single @outputs attribute");
        auto it = std::find_if(attributes.begin(), attributes.end(),
                               [&](const KeelAttribute& a) { return a.name == outputs[0]; });
        if (it == attributes.end())
            throw ParseError(data_start, "@outputs names unknown attribute '" + outputs[0] + "'");
        class_idx = static_cast<std::size_t>(it - attributes.begin());
    }

    Dataset d;
    d.name = relation;
    const std::size_t m = attributes.size() - 1;
    // First-appearance integer coding, per categorical feature column.
    std::vector<std::unordered_map<std::string, double>> codes(attributes.size());
    std::vector<double> feature_row(m);

    std::size_t first_data_line = 0;
    for (std::size_t i = data_start; i < lines.size(); ++i) {
        const std::string line = trim(lines[i]);
        if (line.empty() || line[0] == '%') continue;
        if (first_data_line == 0) first_data_line = i + 1;
        const auto cells = split_commas(line);
        if (cells.size() != attributes.size())
            throw ParseError(i + 1, "row has " + std::to_string(cells.size()) +
                                        " values, expected " + std::to_string(attributes.size()));
        std::size_t col = 0;
        for (std::size_t a = 0; a < attributes.size(); ++a) {
            const std::string& cell = cells[a];
            if (cell == "?" || cell.empty())
                throw ParseError(i + 1, "missing value in attribute '" + attributes[a].name + "'");
            if (a == class_idx) {
                d.labels.push_back(cell);
                continue;
            }
            double value = 0.0;
            if (attributes[a].type == AttrType::numeric) {
                if (!parse_number(cell, value))
                    throw ParseError(i + 1, "non-numeric value '" + cell + "' in numeric attribute '" +
                                                attributes[a].name + "'");
            } else {
                auto& code = codes[a];
                auto it = code.find(cell);
                if (it == code.end())
                    it = code.emplace(cell, static_cast<double>(code.size())).first;
                value = it->second;
            }
            feature_row[col++] = value;
        }
        d.features.append_row(feature_row);
    }
    if (d.labels.empty()) throw ParseError(lines.size(), "no data rows");
    finish_dataset(d, first_data_line);
    return d;
}

namespace {

Dataset parse_csv_impl(const std::string& text, std::size_t label_index,
                       const std::string& name) {
    const auto lines = split_lines(text);
    std::size_t lineno = 0;
    while (lineno < lines.size() && trim(lines[lineno]).empty()) ++lineno;
    if (lineno == lines.size()) throw ParseError(1, "empty CSV");
    const auto header = split_csv_record(lines[lineno], lineno + 1);
    if (label_index >= header.size())
        throw ParseError(lineno + 1, "label column index out of range");
    const std::size_t width = header.size();
    if (width < 2) throw ParseError(lineno + 1, "need at least one feature column and a label");

    Dataset d;
    d.name = name;
    std::vector<double> feature_row(width - 1);
    std::size_t first_data_line = 0;
    for (std::size_t i = lineno + 1; i < lines.size(); ++i) {
        if (trim(lines[i]).empty()) continue;
        if (first_data_line == 0) first_data_line = i + 1;
        const auto cells = split_csv_record(lines[i], i + 1);
        if (cells.size() != width)
            throw ParseError(i + 1, "row has " + std::to_string(cells.size()) +
                                        " values, expected " + std::to_string(width));
        std::size_t col = 0;
        for (std::size_t a = 0; a < width; ++a) {
            if (a == label_index) {
                d.labels.push_back(cells[a]);
                continue;
            }
            double value = 0.0;
            if (!parse_number(cells[a], value))
                throw ParseError(i + 1, "non-numeric value '" + cells[a] + "' in column '" +
                                            header[a] + "'");
            feature_row[col++] = value;
        }
        d.features.append_row(feature_row);
    }
    if (d.labels.empty()) throw ParseError(lines.size(), "no data rows");
    finish_dataset(d, first_data_line);
    return d;
}

} // namespace

Dataset parse_csv(const std::string& text, const std::string& label_column,
                  const std::string& name) {
    const auto lines = split_lines(text);
    std::size_t lineno = 0;
    while (lineno < lines.size() && trim(lines[lineno]).empty()) ++lineno;
    if (lineno == lines.size()) throw ParseError(1, "empty CSV");
    const auto header = split_csv_record(lines[lineno], lineno + 1);
    auto it = std::find(header.begin(), header.end(), label_column);
    if (it == header.end())
        throw ParseError(lineno + 1, "label column '" + label_column + "' not found");
    return parse_csv_impl(text, static_cast<std::size_t>(it - header.begin()), name);
}

Dataset parse_csv(const std::string& text, std::size_t label_index, const std::string& name) {
    return parse_csv_impl(text, label_index, name);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    // Prefer the shortest representation that round-trips.
    for (int prec = 1; prec < 17; ++prec) {
        char shorter[40];
        std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
        double back = 0.0;
        if (parse_number(shorter, back) && back == v) return shorter;
    }
    return buf;
}

std::string to_csv(const Dataset& d) {
    std::string out;
    for (std::size_t j = 0; j < d.num_features(); ++j) {
        out += "f" + std::to_string(j) + ",";
    }
    out += "label\n";
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = 0; j < d.num_features(); ++j) {
            out += format_double(d.features(i, j));
            out += ',';
        }
        out += d.labels[i];
        out += '\n';
    }
    return out;
}

std::pair<Dataset, ScalingParams> standardize(const Dataset& d) {
    if (d.size() < 2) throw std::invalid_argument("standardize: need at least 2 samples");
    const std::size_t n = d.size(), m = d.num_features();
    ScalingParams p;
    p.means.assign(m, 0.0);
    p.standard_deviations.assign(m, 1.0);
    for (std::size_t j = 0; j < m; ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) mean += d.features(i, j);
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double dev = d.features(i, j) - mean;
            var += dev * dev;
        }
        var /= static_cast<double>(n);  // population convention
        p.means[j] = mean;
        p.standard_deviations[j] = var > 0.0 ? std::sqrt(var) : 1.0;
    }
    return {apply_scaling(d, p), p};
}

Dataset apply_scaling(const Dataset& d, const ScalingParams& params) {
    if (params.means.size() != d.num_features())
        throw std::invalid_argument("apply_scaling: dimension mismatch");
    Dataset out = d;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.num_features(); ++j)
            out.features(i, j) = (d.features(i, j) - params.means[j]) / params.standard_deviations[j];
    return out;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
split_indices_by_class(const Dataset& d) {
    std::vector<std::size_t> min_idx, maj_idx;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d.labels[i] == d.minority_label) min_idx.push_back(i);
        else maj_idx.push_back(i);
    }
    return {min_idx, maj_idx};
}

std::pair<Matrix, Matrix> split_by_class(const Dataset& d) {
    auto [min_idx, maj_idx] = split_indices_by_class(d);
    return {d.features.take_rows(min_idx), d.features.take_rows(maj_idx)};
}

std::vector<FoldSplit> stratified_kfold(const Dataset& d, std::size_t k, std::uint64_t seed) {
    if (k < 2) throw std::invalid_argument("stratified_kfold: k must be >= 2");
    auto [min_idx, maj_idx] = split_indices_by_class(d);
    if (min_idx.size() < k || maj_idx.size() < k)
        throw std::invalid_argument("stratified_kfold: class smaller than k");
    Rng rng(seed);
    rng.shuffle(min_idx);
    rng.shuffle(maj_idx);

    std::vector<FoldSplit> folds(k);
    auto deal = [&](const std::vector<std::size_t>& idx) {
        for (std::size_t i = 0; i < idx.size(); ++i) folds[i % k].test.push_back(idx[i]);
    };
    deal(min_idx);
    deal(maj_idx);
    for (auto& f : folds) std::sort(f.test.begin(), f.test.end());
    for (std::size_t f = 0; f < k; ++f) {
        for (std::size_t g = 0; g < k; ++g) {
            if (g == f) continue;
            folds[f].train.insert(folds[f].train.end(), folds[g].test.begin(),
                                  folds[g].test.end());
        }
        std::sort(folds[f].train.begin(), folds[f].train.end());
    }
    return folds;
}

Dataset subset(const Dataset& d, const std::vector<std::size_t>& indices) {
    Dataset out;
    out.name = d.name;
    out.minority_label = d.minority_label;
    out.features = d.features.take_rows(indices);
    out.labels.reserve(indices.size());
    for (auto i : indices) out.labels.push_back(d.labels[i]);
    return out;
}

} // namespace rbccr
