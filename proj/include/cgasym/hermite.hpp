#pragma once

namespace cgasym {

struct OscillatorShape {
    double a = 1.0;  // inverse width, in grid units
    double x0 = 0.0; // centroid
};

// Physicists' Hermite polynomial by the raw three-term recurrence.
// Overflow-prone for n beyond ~150; kept for low-n checks only.
double hermite_poly(int n, double xi);

// Normalized oscillator eigenfunction
//   phi_n(x) = (a / (sqrt(pi) 2^n n!))^{1/2} H_n(a(x-x0)) e^{-a^2(x-x0)^2/2},
// evaluated with the normalized recurrence (2^n n! is never formed).
double oscillator_wf(int n, OscillatorShape shape, double x);

// Same, but with independent Hermite and Gaussian arguments; used when
// the Hermite argument of the simplified form is not a(x-x0).  Returns
// the value without the sqrt(a) scale.
double oscillator_wf_args(int n, double xi_hermite, double xi_gauss);

} // namespace cgasym
