#pragma once

#include "cgasym/context.hpp"

namespace cgasym {

struct KernelValue {
    double f0 = 0.0;
    double f1 = 0.0;
};

struct FDerivs {
    double F = 0.0;
    double dF = 0.0;
    double d2F = 0.0;
};

// Scalar three-term-recursion kernels.  f1 >= 0 for SU(2), f1 <= 0 for
// SU(1,1) (psi-operator sign convention); both vanish at the grid
// boundary zeros of the radicand, which makes the tridiagonal matrix
// self-truncating.  Radicand values in [-1e-9, 0] are clamped to zero;
// below that a domain_error is thrown.
KernelValue su2_kernels(const Su2Context& ctx, double x);
KernelValue su11_kernels(const Su11Context& ctx, double x);

inline KernelValue kernels(const Su2Context& ctx, double x) { return su2_kernels(ctx, x); }
inline KernelValue kernels(const Su11Context& ctx, double x) { return su11_kernels(ctx, x); }

// F(x) = f0(x) + f1(x) + f1(x-1) with analytic first and second
// derivatives (chain rule on the quartic radicand).  x must be strictly
// inside the grid.
FDerivs F_and_derivs(const Su2Context& ctx, double x);
FDerivs F_and_derivs(const Su11Context& ctx, double x);

// Eigenvalue of S+S- at S = s1+s2-n, resp. of K+K- at K = N-n+k1+k2.
double target_eigenvalue(const Su2Context& ctx, int n);
double target_eigenvalue(const Su11Context& ctx, int n);

// Number of admissible n values (equals the grid dimension).
int level_count(const Su2Context& ctx);
int level_count(const Su11Context& ctx);

// B = -F'' for SU(2), +F'' for SU(1,1); A = 2|f1|.
inline double curvature_sign(const Su2Context&) { return -1.0; }
inline double curvature_sign(const Su11Context&) { return 1.0; }

} // namespace cgasym
