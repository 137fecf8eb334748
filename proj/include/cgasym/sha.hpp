#pragma once

#include "cgasym/coeff_table.hpp"
#include "cgasym/context.hpp"

namespace cgasym {

enum class ShaVariant { full, simplified };

struct ShaParams {
    ShaVariant variant = ShaVariant::full;
    Group group = Group::su2;
    double x0 = 0.0;
    double E = 0.0;          // F(x0); NaN when x0 falls outside the grid interior
    double A = 0.0;          // 2|f1(x0)|
    double B = 0.0;          // -F''(x0) for SU(2), +F''(x0) for SU(1,1)
    double C_residual = 0.0; // F'(x0) for the full variant, 0 for simplified
    double a = 0.0;          // (B/A)^{1/4}
    double hbar_omega = 0.0; // sqrt(AB)
    // Raw large-parameter coefficients, set for the simplified variant only.
    double A0 = 0.0, C0 = 0.0, B0 = 0.0;
};

// Locates x0 with F'(x0) = 0 by bracketed bisection refined with
// safeguarded Newton steps (|x0| tolerance 1e-10), then assembles the
// oscillator parameters.  Throws no_bracket_error when F' does not
// change sign on the grid interior and domain_error when A or B is not
// positive at the root.
ShaParams solve_sha_full(const Su2Context& ctx);
ShaParams solve_sha_full(const Su11Context& ctx);

// Closed-form large-parameter limits of the SHA coefficients.
ShaParams simplified_params(const Su2Context& ctx);
ShaParams simplified_params(const Su11Context& ctx);

enum class HermiteArg {
    grid,    // H_n(a(m - x0))
    swapform // SU(2) only: H_n(a (sigma1 m2 - sigma2 m1)/(sigma1+sigma2))
};

// Oscillator-function approximation to the coefficient table.  SU(2)
// values carry the (-1)^n prefactor; SU(1,1) values are stored in
// psi-phase.  Tables are emitted even when the Gaussian spills past the
// grid boundary; the spilled phi_0 mass is reported in boundary_spill.
CoeffTable approx_cg(const Su2Context& ctx, int n, const ShaParams& params,
                     HermiteArg arg = HermiteArg::grid);
CoeffTable approx_cg(const Su11Context& ctx, int n, const ShaParams& params,
                     HermiteArg arg = HermiteArg::grid);

// phi_0 mass outside [lo, hi] for the given shape.
double gaussian_spill(double a, double x0, double lo, double hi);

} // namespace cgasym
