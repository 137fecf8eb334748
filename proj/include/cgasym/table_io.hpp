#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cgasym/coeff_table.hpp"

namespace cgasym {

// Shortest round-trip decimal representation (locale independent).
std::string format_double(double v);
double parse_double(const std::string& s);

struct ComparisonReport {
    std::string context_id;
    int n = 0;
    Method method_a = Method::exact;
    Method method_b = Method::sha_full;
    std::vector<double> m;
    std::vector<double> values_a;
    std::vector<double> values_b;
    double max_abs_err = 0.0;
    double rms_err = 0.0;
    double argmax_m = 0.0;
    double boundary_spill = 0.0;
};

ComparisonReport compare_tables(const CoeffTable& a, const CoeffTable& b);

// All tables must share one grid.  Columns: m, then one column per
// table, headers "<method>_<n>".  A "# phase=..." metadata line
// precedes the header.  '.' decimal separator, ',' field separator,
// '\n' line endings.
void write_table_csv(std::ostream& os, const std::vector<CoeffTable>& tables);
void write_table_json(std::ostream& os, const std::vector<CoeffTable>& tables);

struct ParsedCsv {
    std::string phase;
    std::vector<std::string> columns; // excluding leading "m"
    std::vector<double> m;
    std::vector<std::vector<double>> values; // one vector per column
};

ParsedCsv parse_table_csv(std::istream& is);

void write_report_json(std::ostream& os, const ComparisonReport& r);

} // namespace cgasym
