#include "breakloops/pedigree_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace breakloops {

namespace {

using Kind = PedigreeError::Kind;

std::string trim(std::string_view s) {
    auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::vector<std::string> split(const std::string& line, char delimiter) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        auto pos = line.find(delimiter, start);
        if (pos == std::string::npos) {
            fields.push_back(trim(std::string_view(line).substr(start)));
            return fields;
        }
        fields.push_back(trim(std::string_view(line).substr(start, pos - start)));
        start = pos + 1;
    }
}

bool is_missing(const std::string& token) {
    return token.empty() || token == "0" || lower(token) == "na";
}

std::optional<PersonId> parse_integer(const std::string& token) {
    PersonId value = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) return std::nullopt;
    return value;
}

PersonId parse_id(const std::string& token, std::size_t row, const char* column) {
    auto value = parse_integer(token);
    if (!value || *value <= 0) {
        throw PedigreeError(Kind::invalid_id, row,
                            std::string(column) + " '" + token + "' is not a positive integer");
    }
    return *value;
}

std::optional<PersonId> parse_parent(const std::string& token, std::size_t row, const char* column) {
    if (is_missing(token)) return std::nullopt;
    return parse_id(token, row, column);
}

Sex parse_sex(const std::string& token, std::size_t row) {
    const auto t = lower(token);
    if (t == "0" || t == "f" || t == "female") return Sex::female;
    if (t == "1" || t == "m" || t == "male") return Sex::male;
    throw PedigreeError(Kind::unknown_sex, row, "unknown sex token '" + token + "'");
}

bool parse_flag(const std::string& token, std::size_t row, const char* column) {
    const auto t = lower(token);
    if (t == "1" || t == "true" || t == "yes" || t == "t") return true;
    if (t.empty() || t == "0" || t == "false" || t == "no" || t == "f") return false;
    throw PedigreeError(Kind::unknown_token, row,
                        std::string("unknown ") + column + " token '" + token + "'");
}

TestResult parse_test(const std::string& token, std::size_t row, const std::string& variant) {
    const auto t = lower(token);
    if (t == "1" || t == "carrier") return TestResult::carrier;
    if (t == "0" || t == "non_carrier") return TestResult::non_carrier;
    if (t.empty() || t == "na") return TestResult::untested;
    throw PedigreeError(Kind::unknown_token, row,
                        "unknown test result '" + token + "' for variant " + variant);
}

struct Columns {
    std::size_t id, mother, father, sex, proband;
    std::optional<std::size_t> clone_of, placeholder;
    std::vector<std::pair<std::string, std::size_t>> variants;
};

Columns locate_columns(const std::vector<std::string>& header, const ParseOptions& options) {
    static const std::vector<std::string> reserved = {"id",        "motherid", "fatherid",
                                                      "sex",       "isproband", "cloneof",
                                                      "isplaceholder"};
    auto find = [&](const std::string& name) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (lower(header[i]) == name) return i;
        }
        return std::nullopt;
    };
    auto require = [&](const std::string& name, const char* display) {
        auto pos = find(name);
        if (!pos) {
            throw PedigreeError(Kind::malformed_table, 0,
                                std::string("header is missing required column ") + display);
        }
        return *pos;
    };

    Columns cols{require("id", "ID"),     require("motherid", "MotherID"),
                 require("fatherid", "FatherID"), require("sex", "Sex"),
                 require("isproband", "isProband"), find("cloneof"), find("isplaceholder"), {}};

    if (options.variants) {
        for (const auto& name : *options.variants) {
            auto it = std::find(header.begin(), header.end(), name);
            if (it == header.end()) {
                throw PedigreeError(Kind::malformed_table, 0, "variant column '" + name + "' not found");
            }
            cols.variants.emplace_back(name, static_cast<std::size_t>(it - header.begin()));
        }
    } else {
        for (std::size_t i = 0; i < header.size(); ++i) {
            const auto name = lower(header[i]);
            if (std::find(reserved.begin(), reserved.end(), name) != reserved.end()) continue;
            if (header[i].empty()) {
                throw PedigreeError(Kind::malformed_table, 0, "empty column name in header");
            }
            cols.variants.emplace_back(header[i], i);
        }
    }
    return cols;
}

std::string parent_token(const std::optional<PersonId>& id) {
    return id ? std::to_string(*id) : "NA";
}

const char* test_token(TestResult r) {
    switch (r) {
        case TestResult::carrier: return "1";
        case TestResult::non_carrier: return "0";
        case TestResult::untested: break;
    }
    return "NA";
}

}  // namespace

Pedigree parse_pedigree(std::istream& in, const ParseOptions& options) {
    std::string line;
    std::string header_line;
    while (std::getline(in, line)) {
        if (!trim(line).empty()) {
            header_line = line;
            break;
        }
    }
    if (header_line.empty()) {
        throw PedigreeError(Kind::malformed_table, 0, "input has no header line");
    }
    if (header_line.size() >= 3 && header_line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
        header_line.erase(0, 3);
    }
    const char delimiter =
        options.delimiter.value_or(header_line.find('\t') != std::string::npos ? '\t' : ',');
    const auto header = split(header_line, delimiter);
    const auto cols = locate_columns(header, options);

    std::vector<Individual> individuals;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        ++row;
        auto fields = split(line, delimiter);
        if (fields.size() != header.size()) {
            throw PedigreeError(Kind::malformed_table, row,
                                "expected " + std::to_string(header.size()) + " fields, found " +
                                    std::to_string(fields.size()));
        }
        Individual ind;
        ind.id = parse_id(fields[cols.id], row, "ID");
        ind.mother_id = parse_parent(fields[cols.mother], row, "MotherID");
        ind.father_id = parse_parent(fields[cols.father], row, "FatherID");
        ind.sex = parse_sex(fields[cols.sex], row);
        ind.is_proband = parse_flag(fields[cols.proband], row, "isProband");
        if (cols.clone_of && !fields[*cols.clone_of].empty()) {
            ind.clone_of = parse_id(fields[*cols.clone_of], row, "CloneOf");
        }
        if (cols.placeholder) {
            ind.is_placeholder = parse_flag(fields[*cols.placeholder], row, "IsPlaceholder");
        }
        for (const auto& [name, pos] : cols.variants) {
            auto result = parse_test(fields[pos], row, name);
            if (result != TestResult::untested) ind.test_results.emplace(name, result);
        }
        individuals.push_back(std::move(ind));
    }

    std::vector<std::string> variant_names;
    for (const auto& v : cols.variants) variant_names.push_back(v.first);
    return Pedigree(std::move(individuals), std::move(variant_names));
}

Pedigree parse_pedigree(const std::string& text, const ParseOptions& options) {
    std::istringstream in(text);
    return parse_pedigree(in, options);
}

Pedigree read_pedigree_file(const std::string& path, const ParseOptions& options) {
    std::ifstream in(path);
    if (!in) {
        throw PedigreeError(Kind::malformed_table, 0, "cannot open " + path);
    }
    return parse_pedigree(in, options);
}

void write_pedigree(std::ostream& out, const Pedigree& p, char delimiter) {
    out << "ID" << delimiter << "MotherID" << delimiter << "FatherID" << delimiter << "Sex"
        << delimiter << "isProband";
    for (const auto& v : p.variant_names()) out << delimiter << v;
    out << delimiter << "CloneOf" << delimiter << "IsPlaceholder" << '\n';

    for (const auto& ind : p.individuals()) {
        out << ind.id << delimiter << parent_token(ind.mother_id) << delimiter
            << parent_token(ind.father_id) << delimiter << (ind.sex == Sex::male ? 1 : 0)
            << delimiter << (ind.is_proband ? 1 : 0);
        for (const auto& v : p.variant_names()) out << delimiter << test_token(ind.result_for(v));
        out << delimiter;
        if (ind.clone_of) out << *ind.clone_of;
        out << delimiter << (ind.is_placeholder ? 1 : 0) << '\n';
    }
}

std::string serialize_pedigree(const Pedigree& p, char delimiter) {
    std::ostringstream out;
    write_pedigree(out, p, delimiter);
    return out.str();
}

}  // namespace breakloops
