// cgasym command line: coefficient tables, exact-vs-asymptotic
// comparisons, figure-preset data files, and spectrum dumps.
//
// Exit codes: 0 success, 2 usage error, 3 numeric/domain error.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cgasym/errors.hpp"
#include "cgasym/sha.hpp"
#include "cgasym/spectra.hpp"
#include "cgasym/table_io.hpp"
#include "cgasym/tridiag.hpp"

namespace {

using namespace cgasym;

bool verbose() {
    const char* v = std::getenv("CG_ASYM_LOG");
    return v != nullptr && std::string(v) != "" && std::string(v) != "0";
}

void log_info(const std::string& msg) {
    if (verbose()) std::cerr << "[cgasym] " << msg << "\n";
}

struct GlobalOpts {
    std::string format = "csv";
    std::string out;
};

std::ostream& open_output(const GlobalOpts& g, std::optional<std::ofstream>& file) {
    if (g.out.empty()) return std::cout;
    file.emplace(g.out, std::ios::binary);
    if (!*file) throw domain_error("cannot open output file '" + g.out + "'");
    return *file;
}

struct Su2Args {
    std::string s1, s2, M;
    Su2Context make() const {
        return make_su2_context(HalfInt::parse(s1), HalfInt::parse(s2), HalfInt::parse(M));
    }
};

struct Su11Args {
    double k1 = 0.0, k2 = 0.0;
    int N = 0;
    Su11Context make() const { return make_su11_context(k1, k2, N); }
};

template <class Ctx>
CoeffTable make_table(const Ctx& ctx, int n, const std::string& method) {
    if (method == "exact") return exact_cg(ctx, n);
    if (method == "sha") return approx_cg(ctx, n, solve_sha_full(ctx));
    if (method == "simplified") return approx_cg(ctx, n, simplified_params(ctx));
    throw CLI::ValidationError("--methods", "unknown method '" + method + "'");
}

template <class Ctx>
void run_table(const Ctx& ctx, const std::vector<int>& ns, const std::vector<std::string>& methods,
               const GlobalOpts& g) {
    std::vector<CoeffTable> tables;
    for (const auto& method : methods)
        for (int n : ns) tables.push_back(make_table(ctx, n, method));
    std::optional<std::ofstream> file;
    auto& os = open_output(g, file);
    if (g.format == "json")
        write_table_json(os, tables);
    else
        write_table_csv(os, tables);
    log_info("table: " + ctx.id() + ", " + std::to_string(tables.size()) + " column(s)");
}

template <class Ctx>
void run_compare(const Ctx& ctx, int n, const std::vector<std::string>& methods,
                 const GlobalOpts& g) {
    if (methods.size() != 2)
        throw CLI::ValidationError("--methods", "compare needs exactly two methods");
    const auto report = compare_tables(make_table(ctx, n, methods[0]),
                                       make_table(ctx, n, methods[1]));
    std::optional<std::ofstream> file;
    write_report_json(open_output(g, file), report);
}

// ---- figure presets ------------------------------------------------------

struct Panel {
    std::string file;
    std::string context_id;
    int n = 0;
    std::vector<CoeffTable> tables; // exact, sha_full, sha_simplified
};

template <class Ctx>
Panel make_panel(const Ctx& ctx, int n, const std::string& file) {
    Panel p;
    p.file = file;
    p.context_id = ctx.id();
    p.n = n;
    p.tables.push_back(exact_cg(ctx, n));
    p.tables.push_back(approx_cg(ctx, n, solve_sha_full(ctx)));
    p.tables.push_back(approx_cg(ctx, n, simplified_params(ctx)));
    return p;
}

std::vector<Panel> figure_panels(const std::string& id) {
    std::vector<Panel> panels;
    auto su2 = [](int s1, int s2, int M) {
        return make_su2_context(HalfInt::whole(s1), HalfInt::whole(s2), HalfInt::whole(M));
    };
    if (id == "fig1") {
        for (int n : {0, 1, 5})
            panels.push_back(make_panel(su2(20, 15, 0), n, "fig1_n" + std::to_string(n) + ".csv"));
    } else if (id == "fig2") {
        for (int M : {0, 15, 30, 45})
            panels.push_back(make_panel(su2(60, 40, M), 0, "fig2_M" + std::to_string(M) + ".csv"));
    } else if (id == "fig3") {
        for (int n : {0, 1, 2})
            panels.push_back(make_panel(su2(10, 7, 0), n, "fig3_n" + std::to_string(n) + ".csv"));
    } else if (id == "fig4") {
        panels.push_back(make_panel(make_su11_context(10, 17, 100), 10, "fig4.csv"));
    } else if (id == "fig5") {
        const std::vector<std::pair<int, int>> ks = {{5, 50}, {25, 30}, {30, 25}, {50, 5}};
        for (auto [k1, k2] : ks)
            panels.push_back(make_panel(make_su11_context(k1, k2, 80), 0,
                                        "fig5_k" + std::to_string(k1) + "_" + std::to_string(k2) +
                                            ".csv"));
    } else if (id == "fig6") {
        for (int n : {0, 2})
            panels.push_back(make_panel(make_su11_context(0.5, 1.5, 10), n,
                                        "fig6_n" + std::to_string(n) + ".csv"));
    } else {
        throw CLI::ValidationError("figure", "unknown figure id '" + id + "'");
    }
    return panels;
}

void run_figure(const std::string& id, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    auto panels = figure_panels(id);
    nlohmann::json manifest;
    manifest["figure"] = id;
    for (auto& p : panels) {
        // Column names in the per-panel files: exact, sha_full, sha_simplified.
        const fs::path path = fs::path(out_dir) / p.file;
        std::ofstream os(path, std::ios::binary);
        if (!os) throw domain_error("cannot open '" + path.string() + "'");
        os << "# phase=" << to_string(p.tables.front().phase) << "\n";
        os << "m,exact,sha_full,sha_simplified\n";
        for (std::size_t i = 0; i < p.tables.front().m.size(); ++i) {
            os << format_double(p.tables.front().m[i]);
            for (const auto& t : p.tables) os << "," << format_double(t.values[i]);
            os << "\n";
        }
        nlohmann::json entry;
        entry["file"] = p.file;
        entry["context"] = p.context_id;
        entry["n"] = p.n;
        manifest["panels"].push_back(entry);
        log_info("figure panel: " + path.string());
    }
    std::ofstream ms(fs::path(out_dir) / (id + "_manifest.json"), std::ios::binary);
    ms << manifest.dump(2) << "\n";
}

// ---- spectrum ------------------------------------------------------------

void emit_spectrum(std::ostream& os,
                   const std::map<std::string, std::vector<SpectrumLevel>>& by_method) {
    os << "label1,label2,method,energy,outside_validity\n";
    for (const auto& [method, levels] : by_method) {
        for (const auto& l : levels)
            os << format_double(l.label1) << "," << format_double(l.label2) << "," << method << ","
               << format_double(l.energy) << "," << (l.outside_validity ? 1 : 0) << "\n";
    }
    for (const auto& [method, levels] : by_method) {
        const auto it = std::min_element(levels.begin(), levels.end(),
                                         [](const SpectrumLevel& a, const SpectrumLevel& b) {
                                             return a.energy < b.energy;
                                         });
        if (it != levels.end())
            os << "# argmin " << method << ": label1=" << format_double(it->label1)
               << ",label2=" << format_double(it->label2)
               << ",energy=" << format_double(it->energy) << "\n";
    }
}

void run_spectrum_su2(const Su2Args& args, const CouplingParams& cp,
                      const std::vector<std::string>& methods, const GlobalOpts& g) {
    const HalfInt s1 = HalfInt::parse(args.s1);
    const HalfInt s2 = HalfInt::parse(args.s2);
    const double sigma = (s1 + s2).value();
    std::map<std::string, std::vector<SpectrumLevel>> by_method;
    for (const auto& method : methods) {
        if (method == "exact") {
            by_method[method] = exact_spectrum_su2(cp, s1, s2);
        } else if (method == "rpa") {
            std::vector<SpectrumLevel> v;
            for (HalfInt S = abs(s1 - s2); S <= s1 + s2; S = S + HalfInt::whole(1))
                for (HalfInt M = -S; M <= S; M = M + HalfInt::whole(1))
                    v.push_back(rpa_level_su2(cp, sigma, (s1 + s2 - S).twice / 2,
                                              (S + M).twice / 2));
            by_method[method] = std::move(v);
        } else if (method == "sha_limit") {
            std::vector<SpectrumLevel> v;
            for (HalfInt S = abs(s1 - s2); S <= s1 + s2; S = S + HalfInt::whole(1))
                for (HalfInt M = -S; M <= S; M = M + HalfInt::whole(1))
                    v.push_back(sha_limit_level_su2(cp, sigma, (s1 + s2 - S).twice / 2, M));
            by_method[method] = std::move(v);
        } else {
            throw CLI::ValidationError("--methods", "unknown method '" + method + "'");
        }
    }
    std::optional<std::ofstream> file;
    emit_spectrum(open_output(g, file), by_method);
}

void run_spectrum_su11(const Su11Args& args, const CouplingParams& cp,
                       const std::vector<std::string>& methods, const GlobalOpts& g) {
    std::map<std::string, std::vector<SpectrumLevel>> by_method;
    for (const auto& method : methods) {
        if (method == "exact") {
            by_method[method] = exact_spectrum_su11(cp, args.k1, args.k2, args.N);
        } else if (method == "rpa" || method == "sha_limit") {
            std::vector<SpectrumLevel> v;
            for (int N = 0; N <= args.N; ++N)
                for (int n = 0; n <= N; ++n)
                    v.push_back(method == "rpa"
                                    ? rpa_level_su11(cp, args.k1, args.k2, N, n)
                                    : sha_limit_level_su11(cp, args.k1, args.k2, N, n));
            by_method[method] = std::move(v);
        } else {
            throw CLI::ValidationError("--methods", "unknown method '" + method + "'");
        }
    }
    std::optional<std::ofstream> file;
    emit_spectrum(open_output(g, file), by_method);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and asymptotic SU(2)/SU(1,1) Clebsch-Gordan coefficients"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", g.out, "Output path (stdout when omitted)");

    // table / compare share the context flags.
    Su2Args su2;
    Su11Args su11;
    std::vector<int> ns{0};
    int single_n = 0;
    std::vector<std::string> methods{"exact"};

    auto add_group_flags = [&](CLI::App* cmd, bool is_su2) {
        if (is_su2) {
            cmd->add_option("--s1", su2.s1, "spin s1")->required();
            cmd->add_option("--s2", su2.s2, "spin s2")->required();
            cmd->add_option("--M", su2.M, "total projection M")->required();
        } else {
            cmd->add_option("--k1", su11.k1, "Bargmann index k1")->required();
            cmd->add_option("--k2", su11.k2, "Bargmann index k2")->required();
            cmd->add_option("--N", su11.N, "total quantum number N")->required();
        }
    };

    auto* table = app.add_subcommand("table", "Emit coefficient tables");
    auto* table_su2 = table->add_subcommand("su2");
    auto* table_su11 = table->add_subcommand("su11");
    table->require_subcommand(1);
    add_group_flags(table_su2, true);
    add_group_flags(table_su11, false);
    for (auto* cmd : {table_su2, table_su11}) {
        cmd->add_option("--n", ns, "level indices n")->delimiter(',');
        cmd->add_option("--methods", methods, "methods: exact,sha,simplified")->delimiter(',');
    }

    auto* compare = app.add_subcommand("compare", "Compare two methods for one table");
    auto* compare_su2 = compare->add_subcommand("su2");
    auto* compare_su11 = compare->add_subcommand("su11");
    compare->require_subcommand(1);
    add_group_flags(compare_su2, true);
    add_group_flags(compare_su11, false);
    for (auto* cmd : {compare_su2, compare_su11}) {
        cmd->add_option("--n", single_n, "level index n");
        cmd->add_option("--methods", methods, "exactly two of exact,sha,simplified")
            ->delimiter(',');
    }

    auto* figure = app.add_subcommand("figure", "Emit figure-preset data files");
    std::string figure_id;
    std::string figure_dir = ".";
    figure->add_option("id", figure_id, "fig1..fig6")->required();
    figure->add_option("--out-dir", figure_dir, "output directory");

    auto* spectrum = app.add_subcommand("spectrum", "Dump Hamiltonian spectra");
    auto* spectrum_su2 = spectrum->add_subcommand("su2");
    auto* spectrum_su11 = spectrum->add_subcommand("su11");
    spectrum->require_subcommand(1);
    spectrum_su2->add_option("--s1", su2.s1)->required();
    spectrum_su2->add_option("--s2", su2.s2)->required();
    spectrum_su11->add_option("--k1", su11.k1)->required();
    spectrum_su11->add_option("--k2", su11.k2)->required();
    spectrum_su11->add_option("--Nmax", su11.N)->required();
    CouplingParams cp;
    for (auto* cmd : {spectrum_su2, spectrum_su11}) {
        cmd->add_option("--alpha", cp.alpha, "alpha coefficient");
        cmd->add_option("--chi", cp.chi, "chi coefficient");
        cmd->add_option("--methods", methods, "methods: exact,rpa,sha_limit")->delimiter(',');
    }

    // Let --format/--out appear after any subcommand.
    for (auto* cmd : {table, table_su2, table_su11, compare, compare_su2, compare_su11, figure,
                      spectrum, spectrum_su2, spectrum_su11})
        cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (table->parsed()) {
            if (table_su2->parsed())
                run_table(su2.make(), ns, methods, g);
            else
                run_table(su11.make(), ns, methods, g);
        } else if (compare->parsed()) {
            if (compare_su2->parsed())
                run_compare(su2.make(), single_n, methods, g);
            else
                run_compare(su11.make(), single_n, methods, g);
        } else if (figure->parsed()) {
            run_figure(figure_id, figure_dir);
        } else if (spectrum->parsed()) {
            if (spectrum_su2->parsed())
                run_spectrum_su2(su2, cp, methods, g);
            else
                run_spectrum_su11(su11, cp, methods, g);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const range_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
