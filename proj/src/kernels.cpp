#include "cgasym/kernels.hpp"

#include <cmath>
#include <string>

#include "cgasym/errors.hpp"

namespace cgasym {

namespace {

// Boundary zeros of the radicand are exact in theory but roundoff
// contaminated; clamp small negatives, reject anything worse.
constexpr double kRadicandTol = 1e-9;

double checked_sqrt(double value, const char* what, double x) {
    if (value < -kRadicandTol)
        throw domain_error(std::string(what) + ": radicand negative at x=" + std::to_string(x) +
                           " (outside the physical window)");
    return std::sqrt(value < 0.0 ? 0.0 : value);
}

// s(s+1) from the doubled integer; exact, unlike sigma * sigma.
double sig2(HalfInt s) { return 0.25 * s.twice * (s.twice + 2.0); }

// SU(2) radicand factors.  Evaluated in the natural product form so
// the boundary zeros cancel exactly in floating point.
struct Su2Factors {
    double q1, dq1;   // sigma1^2 - (M-x)(M-x-1)
    double q2p, dq2p; // sigma2^2 - x(x+1)
};

Su2Factors su2_factors(const Su2Context& c, double x) {
    const double M = c.M.value();
    const double u = M - x;
    Su2Factors f;
    f.q1 = sig2(c.s1) - u * (u - 1.0);
    f.dq1 = 2.0 * u - 1.0;
    f.q2p = sig2(c.s2) - x * (x + 1.0);
    f.dq2p = -(2.0 * x + 1.0);
    return f;
}

struct F1Derivs {
    double f1, df1, d2f1;
};

// f1 = sign * sqrt(rad); derivatives by the chain rule.
F1Derivs f1_derivs(double rad, double drad, double d2rad, double sign, double x) {
    if (rad < -kRadicandTol)
        throw domain_error("F: radicand negative at x=" + std::to_string(x));
    if (rad <= 0.0) {
        // Only reachable at (or within roundoff of) a boundary zero,
        // where derivatives are not requested by callers.
        throw domain_error("F: derivative at a radicand zero, x=" + std::to_string(x));
    }
    const double r = std::sqrt(rad);
    F1Derivs d;
    d.f1 = sign * r;
    d.df1 = sign * drad / (2.0 * r);
    d.d2f1 = sign * (d2rad / (2.0 * r) - drad * drad / (4.0 * rad * r));
    return d;
}

F1Derivs su2_f1_derivs(const Su2Context& c, double x) {
    const auto f = su2_factors(c, x);
    const double rad = f.q1 * f.q2p;
    const double drad = f.dq1 * f.q2p + f.q1 * f.dq2p;
    const double d2rad = -2.0 * f.q2p + 2.0 * f.dq1 * f.dq2p - 2.0 * f.q1;
    return f1_derivs(rad, drad, d2rad, +1.0, x);
}

// SU(1,1) radicand as four linear factors; again no monomial expansion
// so that (N/2 - x) vanishes exactly on the boundary.
struct Su11Factors {
    double l1, l2, l3, l4; // 2k1-x-1, N/2-x, 2k2+x, N/2+x+1
};

Su11Factors su11_factors(const Su11Context& c, double x) {
    return {2.0 * c.kappa1 - x - 1.0, 0.5 * c.N - x, 2.0 * c.kappa2 + x, 0.5 * c.N + x + 1.0};
}

F1Derivs su11_f1_derivs(const Su11Context& c, double x) {
    const auto [l1, l2, l3, l4] = su11_factors(c, x);
    const double rad = l1 * l2 * l3 * l4;
    // l1' = l2' = -1, l3' = l4' = +1
    const double drad = -l2 * l3 * l4 - l1 * l3 * l4 + l1 * l2 * l4 + l1 * l2 * l3;
    const double d2rad = 2.0 * (l3 * l4 - l2 * l4 - l2 * l3 - l1 * l4 - l1 * l3 + l1 * l2);
    return f1_derivs(rad, drad, d2rad, -1.0, x);
}

} // namespace

KernelValue su2_kernels(const Su2Context& ctx, double x) {
    const auto f = su2_factors(ctx, x);
    KernelValue kv;
    kv.f0 = f.q1 + sig2(ctx.s2) - x * (x - 1.0);
    if (f.q1 < -kRadicandTol)
        throw domain_error("f1: factor sigma1^2-(M-x)(M-x-1) negative at x=" + std::to_string(x));
    if (f.q2p < -kRadicandTol)
        throw domain_error("f1: factor sigma2^2-x(x+1) negative at x=" + std::to_string(x));
    kv.f1 = checked_sqrt(std::max(f.q1, 0.0) * std::max(f.q2p, 0.0), "f1", x);
    return kv;
}

KernelValue su11_kernels(const Su11Context& ctx, double x) {
    const auto [l1, l2, l3, l4] = su11_factors(ctx, x);
    KernelValue kv;
    kv.f0 = l1 * l2 + (2.0 * ctx.kappa2 + x - 1.0) * (0.5 * ctx.N + x);
    const double p12 = l1 * l2;
    const double p34 = l3 * l4;
    if (p12 < -kRadicandTol)
        throw domain_error("f1: factor (2k1-x-1)(N/2-x) negative at x=" + std::to_string(x));
    if (p34 < -kRadicandTol)
        throw domain_error("f1: factor (2k2+x)(N/2+x+1) negative at x=" + std::to_string(x));
    kv.f1 = -checked_sqrt(std::max(p12, 0.0) * std::max(p34, 0.0), "f1", x);
    return kv;
}

namespace {

template <class Ctx, class F1Fun>
FDerivs assemble_F(const Ctx& ctx, double x, double f0, double df0, double d2f0, F1Fun f1d) {
    if (!(x > grid_min(ctx)) || !(x < grid_max(ctx)))
        throw domain_error("F: x=" + std::to_string(x) + " not strictly inside the grid (" +
                           std::to_string(grid_min(ctx)) + ", " + std::to_string(grid_max(ctx)) +
                           ")");
    const auto a = f1d(ctx, x);
    const auto b = f1d(ctx, x - 1.0);
    FDerivs r;
    r.F = f0 + a.f1 + b.f1;
    r.dF = df0 + a.df1 + b.df1;
    r.d2F = d2f0 + a.d2f1 + b.d2f1;
    return r;
}

} // namespace

FDerivs F_and_derivs(const Su2Context& ctx, double x) {
    const auto f = su2_factors(ctx, x);
    const double f0 = f.q1 + sig2(ctx.s2) - x * (x - 1.0);
    const double df0 = f.dq1 - (2.0 * x - 1.0);
    return assemble_F(ctx, x, f0, df0, -4.0,
                      [](const Su2Context& c, double t) { return su2_f1_derivs(c, t); });
}

FDerivs F_and_derivs(const Su11Context& ctx, double x) {
    const auto [l1, l2, l3, l4] = su11_factors(ctx, x);
    const double h1 = 2.0 * ctx.kappa2 + x - 1.0;
    const double h2 = 0.5 * ctx.N + x;
    const double f0 = l1 * l2 + h1 * h2;
    const double df0 = -l2 - l1 + h2 + h1;
    return assemble_F(ctx, x, f0, df0, 4.0,
                      [](const Su11Context& c, double t) { return su11_f1_derivs(c, t); });
}

int level_count(const Su2Context& ctx) { return ctx.dim; }
int level_count(const Su11Context& ctx) { return ctx.dim; }

double target_eigenvalue(const Su2Context& ctx, int n) {
    const int two_smin = std::min(ctx.s1.twice, ctx.s2.twice);
    if (n < 0 || n > two_smin)
        throw range_error("n: must satisfy 0 <= n <= 2 min(s1,s2), got " + std::to_string(n));
    const HalfInt S = ctx.s1 + ctx.s2 - HalfInt::whole(n);
    if (abs(ctx.M) > S)
        throw range_error("n: |M| > S = s1+s2-n for n = " + std::to_string(n));
    const double Sv = S.value();
    const double Mv = ctx.M.value();
    return Sv * (Sv + 1.0) - Mv * (Mv - 1.0);
}

double target_eigenvalue(const Su11Context& ctx, int n) {
    if (n < 0 || n > ctx.N)
        throw range_error("n: must satisfy 0 <= n <= N, got " + std::to_string(n));
    // (2K + n - 1) n with K = N - n + k1 + k2
    return (2.0 * ctx.N + 2.0 * ctx.k1 + 2.0 * ctx.k2 - n - 1.0) * n;
}

} // namespace cgasym
