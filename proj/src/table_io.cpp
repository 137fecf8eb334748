#include "cgasym/table_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cgasym/errors.hpp"

namespace cgasym {

const char* to_string(Method m) {
    switch (m) {
        case Method::exact: return "exact";
        case Method::sha_full: return "sha";
        case Method::sha_simplified: return "simplified";
    }
    return "?";
}

const char* to_string(PhaseNote p) {
    return p == PhaseNote::condon_shortley ? "condon_shortley" : "psi_phase";
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw domain_error("parse_double: bad number '" + s + "'");
    return v;
}

ComparisonReport compare_tables(const CoeffTable& a, const CoeffTable& b) {
    if (a.context_id != b.context_id)
        throw mismatch_error("compare_tables: contexts differ (" + a.context_id + " vs " +
                             b.context_id + ")");
    if (a.n != b.n) throw mismatch_error("compare_tables: n differs");
    if (a.m.size() != b.m.size()) throw mismatch_error("compare_tables: grid size differs");

    ComparisonReport r;
    r.context_id = a.context_id;
    r.n = a.n;
    r.method_a = a.method;
    r.method_b = b.method;
    r.m = a.m;
    r.values_a = a.values;
    r.values_b = b.values;
    r.boundary_spill = std::max(a.boundary_spill, b.boundary_spill);
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < a.m.size(); ++i) {
        const double err = std::abs(a.values[i] - b.values[i]);
        sum_sq += err * err;
        if (err > r.max_abs_err) {
            r.max_abs_err = err;
            r.argmax_m = a.m[i];
        }
    }
    r.rms_err = a.m.empty() ? 0.0 : std::sqrt(sum_sq / static_cast<double>(a.m.size()));
    return r;
}

namespace {

void check_common_grid(const std::vector<CoeffTable>& tables) {
    if (tables.empty()) throw mismatch_error("table output: no tables");
    for (const auto& t : tables)
        if (t.m != tables.front().m)
            throw mismatch_error("table output: tables have different grids");
}

std::string column_name(const CoeffTable& t) {
    return std::string(to_string(t.method)) + "_" + std::to_string(t.n);
}

} // namespace

void write_table_csv(std::ostream& os, const std::vector<CoeffTable>& tables) {
    check_common_grid(tables);
    os << "# phase=" << to_string(tables.front().phase) << "\n";
    os << "m";
    for (const auto& t : tables) os << "," << column_name(t);
    os << "\n";
    for (std::size_t i = 0; i < tables.front().m.size(); ++i) {
        os << format_double(tables.front().m[i]);
        for (const auto& t : tables) os << "," << format_double(t.values[i]);
        os << "\n";
    }
}

void write_table_json(std::ostream& os, const std::vector<CoeffTable>& tables) {
    check_common_grid(tables);
    nlohmann::json j;
    j["context"] = tables.front().context_id;
    j["phase"] = to_string(tables.front().phase);
    j["m"] = tables.front().m;
    for (const auto& t : tables) {
        nlohmann::json col;
        col["method"] = to_string(t.method);
        col["n"] = t.n;
        col["values"] = t.values;
        col["boundary_spill"] = t.boundary_spill;
        j["tables"].push_back(col);
    }
    os << j.dump(2) << "\n";
}

ParsedCsv parse_table_csv(std::istream& is) {
    ParsedCsv out;
    std::string line;
    bool header_seen = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line.front() == '#') {
            const auto eq = line.find("phase=");
            if (eq != std::string::npos) out.phase = line.substr(eq + 6);
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (!header_seen) {
            if (fields.empty() || fields.front() != "m")
                throw domain_error("parse_table_csv: missing 'm' header");
            out.columns.assign(fields.begin() + 1, fields.end());
            out.values.resize(out.columns.size());
            header_seen = true;
            continue;
        }
        if (fields.size() != out.columns.size() + 1)
            throw domain_error("parse_table_csv: ragged row '" + line + "'");
        out.m.push_back(parse_double(fields.front()));
        for (std::size_t i = 0; i < out.columns.size(); ++i)
            out.values[i].push_back(parse_double(fields[i + 1]));
    }
    return out;
}

void write_report_json(std::ostream& os, const ComparisonReport& r) {
    nlohmann::json j;
    j["context"] = r.context_id;
    j["n"] = r.n;
    j["method_a"] = to_string(r.method_a);
    j["method_b"] = to_string(r.method_b);
    j["m"] = r.m;
    j["values_a"] = r.values_a;
    j["values_b"] = r.values_b;
    j["max_abs_err"] = r.max_abs_err;
    j["rms_err"] = r.rms_err;
    j["argmax_m"] = r.argmax_m;
    j["boundary_spill"] = r.boundary_spill;
    os << j.dump(2) << "\n";
}

} // namespace cgasym
