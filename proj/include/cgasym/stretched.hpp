#pragma once

#include "cgasym/half_int.hpp"

namespace cgasym {

// Stretched SU(2) coefficient (s1,-m; s2,m | s1+s2, 0) from the closed
// factorial formula
//   sqrt[ (2s1)! (2s2)! ((s1+s2)!)^2 /
//         ((2s1+2s2)! (s1+m)! (s1-m)! (s2+m)! (s2-m)!) ].
// Exact big-integer arithmetic for s1+s2 <= 40, log-factorial
// accumulation beyond; the two paths agree to 1e-10 on the overlap.
// Returns exactly 0 for |m| > min(s1, s2); throws domain_error when
// s1+m is not integral.
double stretched_cg_exact(HalfInt s1, HalfInt s2, HalfInt m);

// The individual evaluation paths, exposed for the overlap test.
double stretched_cg_exact_rational(HalfInt s1, HalfInt s2, HalfInt m);
double stretched_cg_log(HalfInt s1, HalfInt s2, HalfInt m);

// Gaussian large-spin limit
//   (1/pi (s1+s2)/(s1 s2))^{1/4} exp(-m^2 (s1+s2) / (2 s1 s2)).
double stretched_cg_asymptotic(HalfInt s1, HalfInt s2, HalfInt m);

} // namespace cgasym
