// Acceptance gate: one check per contract criterion, each printing a
// single PASS/FAIL line.  Thresholds are pinned; do not loosen them.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cgasym/kernels.hpp"
#include "cgasym/sha.hpp"
#include "cgasym/spectra.hpp"
#include "cgasym/stretched.hpp"
#include "cgasym/tridiag.hpp"

using namespace cgasym;
namespace fs = std::filesystem;

namespace {

HalfInt W(int n) { return HalfInt::whole(n); }
HalfInt T(int t) { return HalfInt::from_twice(t); }

struct Gate {
    int id;
    const char* what;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    void verdict(bool ok) const {
        std::printf("CRITERION %2d [%s]: %s\n", id, what, ok ? "PASS" : "FAIL");
        std::fflush(stdout);
        CHECK_MESSAGE(ok, "criterion ", id, " (", what, ")");
    }
};

double max_abs_diff(const CoeffTable& a, const CoeffTable& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
    return worst;
}

} // namespace

TEST_CASE("criterion 1: exact oracle correctness") {
    Gate g{1, "exact oracle"};
    bool ok = true;

    const double r = 1.0 / std::sqrt(2.0);
    const auto su2 = exact_cg(make_su2_context(T(1), T(1), W(0)), 1);
    ok &= std::abs(su2.values[0] - r) <= 1e-12 && std::abs(su2.values[1] + r) <= 1e-12;
    const auto su11 = exact_cg(make_su11_context(0.5, 0.5, 1), 0);
    ok &= std::abs(su11.values[0] - r) <= 1e-12 && std::abs(su11.values[1] - r) <= 1e-12;

    for (int t1 = 1; t1 <= 30 && ok; ++t1) {
        for (int t2 = t1 % 2 == 0 ? 2 : 1; t2 <= 30; t2 += 2) {
            const auto s1 = T(t1), s2 = T(t2);
            const auto table = exact_cg(make_su2_context(s1, s2, W(0)), 0);
            const auto lo = max(-s2, -s1);
            for (std::size_t i = 0; i < table.m.size(); ++i) {
                const auto m = lo + W(static_cast<int>(i));
                if (std::abs(table.values[i] - stretched_cg_exact(s1, s2, m)) > 1e-10) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
    }
    ok &= g.seconds() < 1.0;
    g.verdict(ok);
}

TEST_CASE("criterion 2: randomized eigen-structure suite") {
    Gate g{2, "eigen structure"};
    bool ok = true;
    std::mt19937 rng(20260826);

    for (int trial = 0; trial < 50; ++trial) {
        std::vector<CoeffTable> tables;
        const SymTridiag* matrix = nullptr;
        SymTridiag mat;
        std::vector<double> lambdas;
        if (trial % 2 == 0) {
            std::uniform_int_distribution<int> spin(1, 120); // doubled
            const auto s1 = T(spin(rng)), s2 = T(spin(rng));
            std::uniform_int_distribution<int> proj(-(s1 + s2).twice / 2, (s1 + s2).twice / 2);
            const auto M = T(2 * proj(rng) + ((s1 + s2).integral() ? 0 : 1));
            const auto ctx = make_su2_context(s1, s2, min(max(M, -(s1 + s2)), s1 + s2));
            mat = build_matrix(ctx);
            std::uniform_int_distribution<int> level(0, level_count(ctx) - 1);
            for (int j = 0; j < std::min(4, level_count(ctx)); ++j) {
                int n = level(rng);
                tables.push_back(exact_cg(ctx, n));
                lambdas.push_back(target_eigenvalue(ctx, n));
            }
        } else {
            std::uniform_real_distribution<double> kdist(0.25, 50.0);
            std::uniform_int_distribution<int> Ndist(1, 120);
            const auto ctx = make_su11_context(kdist(rng), kdist(rng), Ndist(rng));
            mat = build_matrix(ctx);
            std::uniform_int_distribution<int> level(0, level_count(ctx) - 1);
            for (int j = 0; j < std::min(4, level_count(ctx)); ++j) {
                int n = level(rng);
                tables.push_back(exact_cg(ctx, n));
                lambdas.push_back(target_eigenvalue(ctx, n));
            }
        }
        matrix = &mat;
        for (std::size_t j = 0; j < tables.size(); ++j)
            ok &= eigen_residual(*matrix, tables[j].values, lambdas[j]) <= 1e-10;
        // drop duplicate levels before the Gram test
        std::vector<CoeffTable> uniq;
        std::vector<double> seen;
        for (std::size_t j = 0; j < tables.size(); ++j) {
            if (std::find(seen.begin(), seen.end(), lambdas[j]) != seen.end()) continue;
            seen.push_back(lambdas[j]);
            uniq.push_back(tables[j]);
        }
        ok &= gram_residual(uniq) <= 1e-10;
    }
    ok &= g.seconds() < 10.0;
    g.verdict(ok);
}

TEST_CASE("criterion 3: exchange symmetry") {
    Gate g{3, "exchange symmetry"};
    bool ok = true;
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> spin(1, 40);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s1 = T(spin(rng)), s2 = T(spin(rng));
        std::uniform_int_distribution<int> proj(0, (s1 + s2).twice / 4);
        const auto M = W(proj(rng)) + ((s1 + s2).integral() ? W(0) : T(1));
        const auto a = make_su2_context(s1, s2, M);
        const auto b = make_su2_context(s2, s1, M);
        for (int n : {0, 1, 2}) {
            if (n >= level_count(a)) continue;
            const double sign = (n % 2 == 0) ? 1.0 : -1.0;
            const auto ea = exact_cg(a, n);
            const auto eb = exact_cg(b, n);
            const auto sa = approx_cg(a, n, simplified_params(a), HermiteArg::swapform);
            const auto sb = approx_cg(b, n, simplified_params(b), HermiteArg::swapform);
            for (std::size_t i = 0; i < ea.values.size(); ++i) {
                const std::size_t j = ea.values.size() - 1 - i;
                ok &= std::abs(eb.values[j] - sign * ea.values[i]) <= 1e-10;
                ok &= std::abs(sb.values[j] - sign * sa.values[i]) <= 1e-10;
            }
        }
    }
    g.verdict(ok);
}

TEST_CASE("criterion 4: su2 sha convergence") {
    Gate g{4, "su2 sha convergence"};
    bool ok = true;
    for (int n : {0, 1, 5}) {
        double prev = 1e300;
        for (int lam : {1, 2, 4, 8}) {
            const auto ctx = make_su2_context(W(20 * lam), W(15 * lam), W(0));
            const double err =
                max_abs_diff(approx_cg(ctx, n, solve_sha_full(ctx)), exact_cg(ctx, n));
            ok &= err < prev;
            if (lam == 1 && n == 0) ok &= err <= 0.01;
            prev = err;
        }
    }
    ok &= g.seconds() < 5.0;
    g.verdict(ok);
}

TEST_CASE("criterion 5: su11 sha convergence") {
    Gate g{5, "su11 sha convergence"};
    bool ok = true;
    const auto fig4 = make_su11_context(10, 17, 100);
    const auto exact = exact_cg(fig4, 10);
    const double err_full = max_abs_diff(approx_cg(fig4, 10, solve_sha_full(fig4)), exact);
    const double err_simp = max_abs_diff(approx_cg(fig4, 10, simplified_params(fig4)), exact);
    ok &= err_full <= 0.05;
    ok &= err_full <= err_simp;
    double prev = 1e300;
    for (int N : {20, 40, 80, 160}) {
        const auto ctx = make_su11_context(1, 2, N);
        const double err = max_abs_diff(approx_cg(ctx, 0, solve_sha_full(ctx)), exact_cg(ctx, 0));
        ok &= err < prev;
        prev = err;
    }
    g.verdict(ok);
}

TEST_CASE("criterion 6: simplified breakdown ordering") {
    Gate g{6, "simplified breakdown"};
    const auto ctx = make_su11_context(5, 50, 80);
    const auto exact = exact_cg(ctx, 0);
    const double err_full = max_abs_diff(approx_cg(ctx, 0, solve_sha_full(ctx)), exact);
    const double err_simp = max_abs_diff(approx_cg(ctx, 0, simplified_params(ctx)), exact);
    g.verdict(err_simp >= 3.0 * err_full);
}

TEST_CASE("criterion 7: stretched asymptotic") {
    Gate g{7, "stretched asymptotic"};
    bool ok = true;
    const double r50 =
        stretched_cg_exact(W(50), W(50), W(0)) / stretched_cg_asymptotic(W(50), W(50), W(0));
    ok &= r50 >= 0.99 && r50 <= 1.01;
    double gap = 1e300;
    for (int s : {10, 20, 40, 80}) {
        const double r =
            stretched_cg_exact(W(s), W(s), W(0)) / stretched_cg_asymptotic(W(s), W(s), W(0));
        ok &= std::abs(r - 1.0) < gap;
        gap = std::abs(r - 1.0);
    }
    g.verdict(ok);
}

TEST_CASE("criterion 8: simplified C0 limit") {
    Gate g{8, "C0 limit"};
    const auto p = simplified_params(make_su11_context(1, 4, 1000000));
    const double ratio = p.C0 / (4.0 - 1.0);
    g.verdict(std::abs(ratio - 3.0) <= 0.01 * 3.0);
}

TEST_CASE("criterion 9: spectrum flip") {
    Gate g{9, "spectrum flip"};
    bool ok = true;
    for (int t1 = 1; t1 <= 8; ++t1) {
        for (int t2 = 1; t2 <= 8; ++t2) {
            if ((t1 + t2) % 2 != 0) continue;
            const auto s1 = T(t1), s2 = T(t2);
            const double sigma = (s1 + s2).value();
            for (double chi : {-0.5, -0.9}) {
                const auto levels = exact_spectrum_su2({1.0, chi}, s1, s2);
                const auto it = std::min_element(
                    levels.begin(), levels.end(),
                    [](const SpectrumLevel& a, const SpectrumLevel& b) {
                        return a.energy < b.energy;
                    });
                ok &= it->label1 == sigma && it->label2 == -sigma;
            }
            for (double chi : {-1.1, -2.0}) {
                const auto levels = exact_spectrum_su2({1.0, chi}, s1, s2);
                const auto it = std::min_element(
                    levels.begin(), levels.end(),
                    [](const SpectrumLevel& a, const SpectrumLevel& b) {
                        return a.energy < b.energy;
                    });
                ok &= std::abs(it->label2) <= 0.5;
            }
        }
    }
    const double sigma = 1e4;
    for (int n : {0, 1}) {
        for (int m : {0, 1}) {
            const double S = sigma - n, M = -S + m;
            const CouplingParams p{1.0, -0.5};
            const double exact = p.alpha * M + p.chi * (S * (S + 1) - M * (M - 1));
            ok &= std::abs(exact - rpa_level_su2(p, sigma, n, m).energy) / sigma < 1e-2;
        }
        for (int M : {-1, 0}) {
            const double S = sigma - n;
            const CouplingParams p{1.0, -2.0};
            const double exact = p.alpha * M + p.chi * (S * (S + 1) - M * (M - 1));
            ok &= std::abs(exact - sha_limit_level_su2(p, sigma, n, W(M)).energy) / sigma < 1e-2;
        }
    }
    g.verdict(ok);
}

TEST_CASE("criterion 10: figure determinism") {
    Gate g{10, "figure determinism"};
    bool ok = true;
    const std::string cli = CGASYM_CLI_PATH;
    const auto base = fs::temp_directory_path() / "cgasym_acceptance";
    fs::remove_all(base);
    for (int run = 0; run < 2; ++run) {
        for (int fig = 1; fig <= 6; ++fig) {
            const auto dir = base / ("run" + std::to_string(run)) /
                             ("fig" + std::to_string(fig));
            const std::string cmd = cli + " figure fig" + std::to_string(fig) +
                                    " --out-dir " + dir.string() + " > /dev/null 2>&1";
            ok &= WEXITSTATUS(std::system(cmd.c_str())) == 0;
        }
    }
    for (const auto& entry : fs::recursive_directory_iterator(base / "run0")) {
        if (!entry.is_regular_file()) continue;
        const auto rel = fs::relative(entry.path(), base / "run0");
        std::ifstream a(entry.path(), std::ios::binary), b(base / "run1" / rel, std::ios::binary);
        std::ostringstream sa, sb;
        sa << a.rdbuf();
        sb << b.rdbuf();
        ok &= !sa.str().empty() && sa.str() == sb.str();
    }
    ok &= g.seconds() < 5.0;
    g.verdict(ok);
}
