#pragma once

#include <string>
#include <vector>

#include "cgasym/half_int.hpp"

namespace cgasym {

enum class Group { su2, su11 };

// Fixed-M subspace of an SU(2) tensor product {s1} x {s2}.  The grid
// holds the admissible m = m2 values in unit steps.
struct Su2Context {
    HalfInt s1, s2, M;
    double sigma1 = 0.0; // sqrt(s1(s1+1))
    double sigma2 = 0.0;
    HalfInt m_min, m_max;
    int dim = 0;
    std::vector<double> grid;

    std::string id() const;
};

// Fixed-N subspace of an SU(1,1) positive-discrete-series product
// {k1} x {k2}.  Grid: m = -N/2 .. N/2 in unit steps (N+1 points).
struct Su11Context {
    double k1 = 0.0, k2 = 0.0;
    int N = 0;
    double kappa1 = 0.0; // k1 + N/4
    double kappa2 = 0.0;
    int dim = 0;
    std::vector<double> grid;

    std::string id() const;
};

Su2Context make_su2_context(HalfInt s1, HalfInt s2, HalfInt M);
Su11Context make_su11_context(double k1, double k2, int N);

inline Group group_of(const Su2Context&) { return Group::su2; }
inline Group group_of(const Su11Context&) { return Group::su11; }

inline double grid_min(const Su2Context& c) { return c.m_min.value(); }
inline double grid_max(const Su2Context& c) { return c.m_max.value(); }
inline double grid_min(const Su11Context& c) { return -0.5 * c.N; }
inline double grid_max(const Su11Context& c) { return 0.5 * c.N; }

} // namespace cgasym
