#include "cgasym/spectra.hpp"

#include <string>

#include "cgasym/errors.hpp"

namespace cgasym {

const char* to_string(SpectrumMethod m) {
    switch (m) {
        case SpectrumMethod::exact: return "exact";
        case SpectrumMethod::rpa: return "rpa";
        case SpectrumMethod::sha_limit: return "sha_limit";
    }
    return "?";
}

std::vector<SpectrumLevel> exact_spectrum_su2(const CouplingParams& p, HalfInt s1, HalfInt s2,
                                              std::size_t cap) {
    if (s1.twice < 0 || s2.twice < 0) throw domain_error("exact_spectrum: spins must be >= 0");

    // Count levels first: sum over S of (2S+1).
    std::size_t count = 0;
    for (HalfInt S = abs(s1 - s2); S <= s1 + s2; S = S + HalfInt::whole(1))
        count += static_cast<std::size_t>(S.twice + 1);
    if (count > cap)
        throw size_error("exact_spectrum: enumeration of " + std::to_string(count) +
                         " levels exceeds cap " + std::to_string(cap));

    std::vector<SpectrumLevel> levels;
    levels.reserve(count);
    for (HalfInt S = abs(s1 - s2); S <= s1 + s2; S = S + HalfInt::whole(1)) {
        const double Sv = S.value();
        for (HalfInt M = -S; M <= S; M = M + HalfInt::whole(1)) {
            const double Mv = M.value();
            SpectrumLevel l;
            l.group = Group::su2;
            l.method = SpectrumMethod::exact;
            l.label1 = Sv;
            l.label2 = Mv;
            l.energy = p.alpha * Mv + p.chi * (Sv * (Sv + 1.0) - Mv * (Mv - 1.0));
            levels.push_back(l);
        }
    }
    return levels;
}

std::vector<SpectrumLevel> exact_spectrum_su11(const CouplingParams& p, double k1, double k2,
                                               int N_max, std::size_t cap) {
    if (!(k1 > 0.0) || !(k2 > 0.0)) throw domain_error("exact_spectrum: k1, k2 must be > 0");
    if (N_max < 0) throw domain_error("exact_spectrum: N_max must be >= 0");
    const std::size_t count =
        static_cast<std::size_t>(N_max + 1) * static_cast<std::size_t>(N_max + 2) / 2;
    if (count > cap)
        throw size_error("exact_spectrum: enumeration of " + std::to_string(count) +
                         " levels exceeds cap " + std::to_string(cap));

    std::vector<SpectrumLevel> levels;
    levels.reserve(count);
    for (int N = 0; N <= N_max; ++N) {
        for (int n = 0; n <= N; ++n) {
            SpectrumLevel l;
            l.group = Group::su11;
            l.method = SpectrumMethod::exact;
            l.label1 = N;
            l.label2 = n;
            // alpha (K+n) + chi (2K+n-1) n with K = N-n+k1+k2
            l.energy = p.alpha * (k1 + k2 + N) +
                       p.chi * (2.0 * k1 + 2.0 * k2 + 2.0 * N - n - 1.0) * n;
            levels.push_back(l);
        }
    }
    return levels;
}

SpectrumLevel rpa_level_su2(const CouplingParams& p, double sigma, int n, int m) {
    if (n < 0 || m < 0) throw domain_error("rpa_level: labels must be >= 0");
    SpectrumLevel l;
    l.group = Group::su2;
    l.method = SpectrumMethod::rpa;
    l.label1 = n;
    l.label2 = m;
    const double freq = p.alpha + p.chi * (2.0 * sigma + 1.0);
    l.energy = -p.alpha * sigma + p.alpha * n + freq * m;
    if (!(p.chi > -p.alpha)) {
        l.outside_validity = true;
        l.validity_note = "chi <= -alpha";
    } else if (freq < 0.0) {
        l.outside_validity = true;
        l.validity_note = "alpha + chi(2 sigma + 1) < 0";
    }
    return l;
}

SpectrumLevel rpa_level_su11(const CouplingParams& p, double k1, double k2, int N, int n) {
    if (N < 0 || n < 0) throw domain_error("rpa_level: labels must be >= 0");
    SpectrumLevel l;
    l.group = Group::su11;
    l.method = SpectrumMethod::rpa;
    l.label1 = N;
    l.label2 = n;
    l.energy = p.alpha * (k1 + k2) + p.alpha * N + p.chi * (2.0 * k1 + 2.0 * k2 - 1.0) * n;
    return l;
}

SpectrumLevel sha_limit_level_su2(const CouplingParams& p, double sigma, int n, HalfInt M) {
    if (n < 0) throw domain_error("sha_limit_level: n must be >= 0");
    SpectrumLevel l;
    l.group = Group::su2;
    l.method = SpectrumMethod::sha_limit;
    l.label1 = n;
    l.label2 = M.value();
    const double Mv = M.value();
    l.energy = p.chi * sigma * (sigma + 1.0) - p.chi * (2.0 * sigma + 1.0) * n + p.alpha * Mv -
               p.chi * Mv * (Mv - 1.0);
    return l;
}

SpectrumLevel sha_limit_level_su11(const CouplingParams& p, double k1, double k2, int N, int n) {
    if (N < 0 || n < 0) throw domain_error("sha_limit_level: labels must be >= 0");
    SpectrumLevel l;
    l.group = Group::su11;
    l.method = SpectrumMethod::sha_limit;
    l.label1 = N;
    l.label2 = n;
    const double scale = k1 + k2 + N;
    l.energy = p.alpha * scale + 2.0 * p.chi * scale * n;
    return l;
}

} // namespace cgasym
