#include "cgasym/sha.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cgasym/errors.hpp"
#include "cgasym/hermite.hpp"
#include "cgasym/kernels.hpp"

namespace cgasym {

namespace {

constexpr double kX0Tol = 1e-10;

// Keep the bracket off the grid endpoints: f1(x-1) is only defined for
// x >= m_min and F'' blows up at the radicand zeros.
template <class Ctx>
std::pair<double, double> interior_bounds(const Ctx& ctx) {
    const double lo = grid_min(ctx);
    const double hi = grid_max(ctx);
    const double eps = 1e-6 * std::max(1.0, hi - lo);
    return {lo + eps, hi - eps};
}

template <class Ctx>
double find_x0(const Ctx& ctx, double guess) {
    const auto [lo_bound, hi_bound] = interior_bounds(ctx);
    const double x0s = std::clamp(guess, lo_bound, hi_bound);

    auto dF = [&](double x) { return F_and_derivs(ctx, x).dF; };

    // Expand a bracket geometrically around the simplified centroid.
    double delta = 1e-3 * std::max(1.0, hi_bound - lo_bound);
    double lo = std::max(lo_bound, x0s - delta);
    double hi = std::min(hi_bound, x0s + delta);
    double dlo = dF(lo);
    double dhi = dF(hi);
    while (dlo * dhi > 0.0) {
        if (lo <= lo_bound && hi >= hi_bound)
            throw no_bracket_error("solve_sha_full: F' does not change sign on (" +
                                   std::to_string(grid_min(ctx)) + ", " +
                                   std::to_string(grid_max(ctx)) +
                                   "); SHA not applicable for " + ctx.id());
        delta *= 2.0;
        lo = std::max(lo_bound, x0s - delta);
        hi = std::min(hi_bound, x0s + delta);
        dlo = dF(lo);
        dhi = dF(hi);
    }
    if (dlo == 0.0) return lo;
    if (dhi == 0.0) return hi;

    // Bisection with safeguarded Newton refinement.
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200 && hi - lo > kX0Tol; ++it) {
        const auto d = F_and_derivs(ctx, x);
        if (d.dF == 0.0) return x;
        if (d.dF * dlo > 0.0)
            lo = x;
        else
            hi = x;
        double next = x - d.dF / d.d2F;
        if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - x) <= kX0Tol) return next;
        x = next;
    }
    return x;
}

template <class Ctx>
ShaParams assemble_full(const Ctx& ctx, double x0) {
    const auto d = F_and_derivs(ctx, x0);
    const auto kv = kernels(ctx, x0);
    ShaParams p;
    p.variant = ShaVariant::full;
    p.group = group_of(ctx);
    p.x0 = x0;
    p.E = d.F;
    p.A = 2.0 * std::abs(kv.f1);
    p.B = curvature_sign(ctx) * d.d2F;
    p.C_residual = d.dF;
    if (!(p.A > 0.0))
        throw domain_error("solve_sha_full: A = 2|f1(x0)| not positive for " + ctx.id());
    if (!(p.B > 0.0))
        throw domain_error("solve_sha_full: negative curvature (B <= 0) for " + ctx.id());
    p.a = std::pow(p.B / p.A, 0.25);
    p.hbar_omega = std::sqrt(p.A * p.B);
    return p;
}

// F(x0) where defined; the simplified centroid can sit outside the
// grid interior for extreme parameters.
template <class Ctx>
double guarded_E(const Ctx& ctx, double x0) {
    if (x0 > grid_min(ctx) && x0 < grid_max(ctx)) return F_and_derivs(ctx, x0).F;
    return std::numeric_limits<double>::quiet_NaN();
}

ShaParams finish_simplified(ShaParams p) {
    p.variant = ShaVariant::simplified;
    p.C_residual = 0.0; // C0 is folded into x0 = -C0/B0
    p.A = p.A0;
    p.B = p.B0;
    p.a = std::pow(p.B0 / p.A0, 0.25);
    p.hbar_omega = std::sqrt(p.A0 * p.B0);
    return p;
}

} // namespace

ShaParams solve_sha_full(const Su2Context& ctx) {
    if (ctx.dim < 3) throw domain_error("solve_sha_full: need dim >= 3, got " + std::to_string(ctx.dim));
    return assemble_full(ctx, find_x0(ctx, simplified_params(ctx).x0));
}

ShaParams solve_sha_full(const Su11Context& ctx) {
    if (ctx.dim < 3) throw domain_error("solve_sha_full: need dim >= 3, got " + std::to_string(ctx.dim));
    return assemble_full(ctx, find_x0(ctx, simplified_params(ctx).x0));
}

ShaParams simplified_params(const Su2Context& ctx) {
    const double s1 = ctx.sigma1;
    const double s2 = ctx.sigma2;
    const double M = ctx.M.value();
    const double sum = s1 + s2;
    const double bracket = sum * sum - M * M;
    if (!(bracket > 0.0))
        throw domain_error("simplified_params: (sigma1+sigma2)^2 - M^2 <= 0 for " + ctx.id());
    ShaParams p;
    p.group = Group::su2;
    p.A0 = 2.0 * s1 * s2 * (1.0 - M * M / (sum * sum));
    p.C0 = 2.0 * sum * M / s1;
    p.B0 = 2.0 * sum * sum / (s1 * s2);
    p.x0 = s2 * M / sum;
    p.E = guarded_E(ctx, p.x0);
    return finish_simplified(p);
}

ShaParams simplified_params(const Su11Context& ctx) {
    if (ctx.N == 0) throw domain_error("simplified_params: N = 0 for " + ctx.id());
    const double N = ctx.N;
    const double root = std::sqrt(ctx.kappa1 * ctx.kappa2);
    ShaParams p;
    p.group = Group::su11;
    p.A0 = 2.0 * N * root;
    p.C0 = (N + 4.0 * root) / (2.0 * root) * (ctx.kappa2 - ctx.kappa1);
    p.B0 = (N + 4.0 * root) * (N + 4.0 * root) / (2.0 * N * root);
    p.x0 = N * (ctx.kappa1 - ctx.kappa2) / (N + 4.0 * root); // -C0/B0
    p.E = guarded_E(ctx, p.x0);
    return finish_simplified(p);
}

double gaussian_spill(double a, double x0, double lo, double hi) {
    // phi_0^2 = (a/sqrt(pi)) exp(-a^2 (x-x0)^2); mass outside [lo, hi].
    const double inside = 0.5 * (std::erf(a * (hi - x0)) - std::erf(a * (lo - x0)));
    return std::max(0.0, 1.0 - inside);
}

namespace {

template <class Ctx>
CoeffTable approx_common(const Ctx& ctx, int n, const ShaParams& params) {
    if (n < 0) throw range_error("approx_cg: n must be >= 0");
    if (params.group != group_of(ctx))
        throw mismatch_error("approx_cg: parameter group does not match the context");
    CoeffTable t;
    t.context_id = ctx.id();
    t.group = group_of(ctx);
    t.n = n;
    t.method = params.variant == ShaVariant::full ? Method::sha_full : Method::sha_simplified;
    t.m = ctx.grid;
    t.values.resize(ctx.grid.size());
    t.boundary_spill = gaussian_spill(params.a, params.x0, grid_min(ctx), grid_max(ctx));
    return t;
}

} // namespace

CoeffTable approx_cg(const Su2Context& ctx, int n, const ShaParams& params, HermiteArg arg) {
    CoeffTable t = approx_common(ctx, n, params);
    t.phase = PhaseNote::condon_shortley;
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const double sqrt_a = std::sqrt(params.a);
    const double sum = ctx.sigma1 + ctx.sigma2;
    const double M = ctx.M.value();
    for (std::size_t i = 0; i < t.m.size(); ++i) {
        const double m = t.m[i];
        const double xi_g = params.a * (m - params.x0);
        double xi_h = xi_g;
        if (arg == HermiteArg::swapform) {
            // m2 = m, m1 = M - m
            xi_h = params.a * (ctx.sigma1 * m - ctx.sigma2 * (M - m)) / sum;
        }
        t.values[i] = sign * sqrt_a * oscillator_wf_args(n, xi_h, xi_g);
    }
    return t;
}

CoeffTable approx_cg(const Su11Context& ctx, int n, const ShaParams& params, HermiteArg arg) {
    if (arg == HermiteArg::swapform)
        throw mismatch_error("approx_cg: swapform is defined for SU(2) only");
    CoeffTable t = approx_common(ctx, n, params);
    t.phase = PhaseNote::psi_phase;
    const OscillatorShape shape{params.a, params.x0};
    for (std::size_t i = 0; i < t.m.size(); ++i)
        t.values[i] = oscillator_wf(n, shape, t.m[i]);
    return t;
}

} // namespace cgasym
