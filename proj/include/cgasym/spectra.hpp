#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cgasym/context.hpp"
#include "cgasym/half_int.hpp"

namespace cgasym {

// H = alpha S0 + chi S+S-  (SU(2)), alpha K0 + chi K+K-  (SU(1,1)).
struct CouplingParams {
    double alpha = 1.0;
    double chi = 0.0;
};

enum class SpectrumMethod { exact, rpa, sha_limit };

struct SpectrumLevel {
    Group group = Group::su2;
    SpectrumMethod method = SpectrumMethod::exact;
    // exact su2: (S, M); rpa su2: (n, m); sha_limit su2: (n, M);
    // su11: (N, n) throughout.
    double label1 = 0.0;
    double label2 = 0.0;
    double energy = 0.0;
    bool outside_validity = false;
    std::string validity_note; // triggering inequality, when flagged
};

const char* to_string(SpectrumMethod m);

// E_SM = alpha M + chi [S(S+1) - M(M-1)] over S = |s1-s2|..s1+s2,
// M = -S..S.  Throws size_error when the enumeration exceeds the cap.
std::vector<SpectrumLevel> exact_spectrum_su2(const CouplingParams& p, HalfInt s1, HalfInt s2,
                                              std::size_t cap = 1000000);

// E_Nn = alpha (k1+k2+N) + chi (2k1+2k2+2N-n-1) n over N = 0..N_max,
// n = 0..N.
std::vector<SpectrumLevel> exact_spectrum_su11(const CouplingParams& p, double k1, double k2,
                                               int N_max, std::size_t cap = 1000000);

// RPA contraction spectra.  Evaluates unconditionally; validity is a
// flag, not an error.
SpectrumLevel rpa_level_su2(const CouplingParams& p, double sigma, int n, int m);
SpectrumLevel rpa_level_su11(const CouplingParams& p, double k1, double k2, int N, int n);

// SHA-limit spectra (oscillator coupled to a U(1) rotor for SU(2)).
SpectrumLevel sha_limit_level_su2(const CouplingParams& p, double sigma, int n, HalfInt M);
SpectrumLevel sha_limit_level_su11(const CouplingParams& p, double k1, double k2, int N, int n);

} // namespace cgasym
