#pragma once

#include <string>
#include <vector>

#include "cgasym/context.hpp"

namespace cgasym {

enum class Method { exact, sha_full, sha_simplified };

// SU(2) tables are in the Condon-Shortley phase.  SU(1,1) tables store
// the psi-phase value; the CG coefficient itself is (-1)^(N+m) times
// the stored value.
enum class PhaseNote { condon_shortley, psi_phase };

struct CoeffTable {
    std::string context_id;
    Group group = Group::su2;
    int n = 0;
    Method method = Method::exact;
    PhaseNote phase = PhaseNote::condon_shortley;
    std::vector<double> m;      // grid values
    std::vector<double> values; // one coefficient per grid point
    // phi_0 probability mass outside [m_min, m_max]; zero for exact tables.
    double boundary_spill = 0.0;
};

const char* to_string(Method m);
const char* to_string(PhaseNote p);

} // namespace cgasym
