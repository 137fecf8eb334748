#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cgasym/errors.hpp"
#include "cgasym/sha.hpp"
#include "cgasym/tridiag.hpp"

using namespace cgasym;

namespace {

HalfInt W(int n) { return HalfInt::whole(n); }

double max_abs_diff(const CoeffTable& a, const CoeffTable& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
    return worst;
}

} // namespace

TEST_CASE("symmetric context centers at zero") {
    for (int s : {3, 7, 20}) {
        const auto ctx = make_su2_context(W(s), W(s), W(0));
        CHECK(std::abs(solve_sha_full(ctx).x0) <= 1e-8);
        CHECK(simplified_params(ctx).x0 == 0.0);
    }
    for (double k : {0.5, 4.0}) {
        const auto ctx = make_su11_context(k, k, 24);
        CHECK(simplified_params(ctx).x0 == 0.0);
        CHECK(std::abs(solve_sha_full(ctx).x0) <= 1e-8);
    }
}

TEST_CASE("full vs simplified at (20,15,0)") {
    const auto ctx = make_su2_context(W(20), W(15), W(0));
    const auto full = solve_sha_full(ctx);
    const auto simp = simplified_params(ctx);
    CHECK(std::abs(full.x0 - simp.x0) <= 0.5);
    CHECK(std::abs(full.a / simp.a - 1.0) <= 0.05);
    CHECK(full.A > 0.0);
    CHECK(full.B > 0.0);
    CHECK(full.hbar_omega == doctest::Approx(std::sqrt(full.A * full.B)).epsilon(1e-12));
    CHECK(std::abs(full.C_residual) <= 1e-6 * std::abs(full.E));
}

TEST_CASE("simplified parameters, pinned") {
    const auto su2 = simplified_params(make_su2_context(W(20), W(15), W(0)));
    CHECK(su2.x0 == 0.0);
    const double sig1 = std::sqrt(420.0), sig2 = std::sqrt(240.0);
    CHECK(su2.a * su2.a ==
          doctest::Approx((sig1 + sig2) / (sig1 * sig2)).epsilon(1e-12));
    CHECK(su2.a * su2.a == doctest::Approx(0.113345).epsilon(1e-4));

    const auto su11 = simplified_params(make_su11_context(1, 1, 20));
    CHECK(su11.x0 == 0.0);
    CHECK(su11.a * su11.a == doctest::Approx(11.0 / 60.0).epsilon(1e-12));
}

TEST_CASE("simplified ground value at s=50") {
    const auto ctx = make_su2_context(W(50), W(50), W(0));
    const auto table = approx_cg(ctx, 0, simplified_params(ctx));
    const std::size_t mid = table.values.size() / 2;
    CHECK(table.m[mid] == 0.0);
    CHECK(table.values[mid] == doctest::Approx(0.33508).epsilon(3e-4));
    // H1 node at the centroid
    const auto t1 = approx_cg(ctx, 1, simplified_params(ctx));
    CHECK(t1.values[mid] == 0.0);
}

TEST_CASE("approximation error against the oracle") {
    const auto su2 = make_su2_context(W(20), W(15), W(0));
    const auto exact = exact_cg(su2, 0);
    CHECK(max_abs_diff(approx_cg(su2, 0, solve_sha_full(su2)), exact) <= 0.01);
    CHECK(max_abs_diff(approx_cg(su2, 0, simplified_params(su2)), exact) <= 0.01);

    const auto su11 = make_su11_context(10, 17, 100);
    CHECK(max_abs_diff(approx_cg(su11, 10, solve_sha_full(su11)), exact_cg(su11, 10)) <= 0.05);
}

TEST_CASE("approximate tables are near-normalized") {
    const auto ctx = make_su2_context(W(20), W(15), W(0));
    for (const auto& params : {solve_sha_full(ctx), simplified_params(ctx)}) {
        const auto t = approx_cg(ctx, 0, params);
        double norm2 = 0.0;
        for (double v : t.values) norm2 += v * v;
        CHECK(norm2 >= 0.98);
        CHECK(norm2 <= 1.02);
        CHECK(t.boundary_spill <= 1e-6);
    }
}

TEST_CASE("full parameters approach the simplified ones under scaling") {
    double prev = 1e300;
    for (int lam : {1, 2, 4}) {
        const auto ctx = make_su2_context(W(20 * lam), W(15 * lam), W(0));
        const auto full = solve_sha_full(ctx);
        const auto simp = simplified_params(ctx);
        const double gap = std::abs(full.a / simp.a - 1.0) + std::abs(full.x0 - simp.x0);
        CHECK(gap < prev);
        prev = gap;
    }
}

TEST_CASE("swapform exchange identity") {
    for (auto [s1, s2, M] : {std::tuple{W(5), W(3), W(1)}, {W(10), W(7), W(2)}}) {
        const auto a = make_su2_context(s1, s2, M);
        const auto b = make_su2_context(s2, s1, M);
        for (int n : {0, 1, 2}) {
            const auto ta = approx_cg(a, n, simplified_params(a), HermiteArg::swapform);
            const auto tb = approx_cg(b, n, simplified_params(b), HermiteArg::swapform);
            const double sign = (n % 2 == 0) ? 1.0 : -1.0;
            REQUIRE(tb.values.size() == ta.values.size());
            for (std::size_t i = 0; i < ta.values.size(); ++i)
                CHECK(tb.values[tb.values.size() - 1 - i] ==
                      doctest::Approx(sign * ta.values[i]).epsilon(1e-10));
        }
    }
    CHECK_THROWS_AS(approx_cg(make_su11_context(1, 2, 10), 0,
                              simplified_params(make_su11_context(1, 2, 10)),
                              HermiteArg::swapform),
                    mismatch_error);
}

TEST_CASE("simplified C0 growth rate") {
    // C0/(k2-k1) tends to 4 for large N with k1, k2 fixed; at moderate N
    // it is still visibly below the limit.
    const auto big = simplified_params(make_su11_context(1, 4, 1000000));
    CHECK(big.C0 / 3.0 == doctest::Approx(4.0).epsilon(1e-4));
    const auto small = simplified_params(make_su11_context(1, 4, 20));
    CHECK(small.C0 / 3.0 < 3.9);
    CHECK(small.C0 / 3.0 > 1.0);
}

TEST_CASE("gaussian spill") {
    CHECK(gaussian_spill(1.0, 0.0, -8.0, 8.0) <= 1e-12);
    CHECK(gaussian_spill(1.0, 0.0, 0.0, 8.0) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(gaussian_spill(0.2, 7.0, -8.0, 8.0) > 0.1);
}

TEST_CASE("su11 approximation carries the psi phase") {
    const auto ctx = make_su11_context(5, 50, 80);
    const auto t = approx_cg(ctx, 0, solve_sha_full(ctx));
    CHECK(t.phase == PhaseNote::psi_phase);
    for (double v : t.values) CHECK(v >= 0.0);
}
