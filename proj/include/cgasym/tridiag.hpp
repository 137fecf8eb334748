#pragma once

#include <span>
#include <vector>

#include "cgasym/coeff_table.hpp"
#include "cgasym/context.hpp"

namespace cgasym {

// Symmetric tridiagonal matrix on the fixed-M (fixed-N) subspace:
// diag[i] = f0(m_i), offdiag[i] = f1(m_i).
struct SymTridiag {
    std::vector<double> diag;
    std::vector<double> offdiag; // size diag.size()-1
    std::vector<double> grid;

    // out(m) = f0(m) v(m) + f1(m) v(m+1) + f1(m-1) v(m-1)
    void apply(std::span<const double> v, std::span<double> out) const;
    double inf_norm() const;
};

SymTridiag build_matrix(const Su2Context& ctx);
SymTridiag build_matrix(const Su11Context& ctx);

// Unit eigenvector at the analytically known eigenvalue, via
// known-eigenvalue inverse iteration.  Sign convention: SU(2) fixes the
// component at m_max to sign (-1)^n (Condon-Shortley); SU(1,1) fixes
// the component at m = +N/2 to +1 (positive oscillator tail in
// psi-phase).  When the boundary component is negligible the rule is
// applied at the nearest interior point of non-negligible magnitude.
CoeffTable exact_cg(const Su2Context& ctx, int n);
CoeffTable exact_cg(const Su11Context& ctx, int n);

// max |<v_i, v_j> - delta_ij| over all pairs of exact tables from the
// same context.  Throws mismatch_error on mixed contexts or methods.
double gram_residual(const std::vector<CoeffTable>& tables);

// ||T v - lambda v||_inf / ||T||_inf, for diagnostics and tests.
double eigen_residual(const SymTridiag& T, std::span<const double> v, double lambda);

} // namespace cgasym
