#include "cgasym/context.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "cgasym/errors.hpp"

namespace cgasym {

HalfInt HalfInt::parse(const std::string& text) {
    if (text.empty()) throw domain_error("half-integer: empty string");
    const auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            const int num = std::stoi(text.substr(0, slash));
            const int den = std::stoi(text.substr(slash + 1));
            if (den == 2) return from_twice(num);
            if (den == 1) return whole(num);
            throw domain_error("half-integer '" + text + "': denominator must be 1 or 2");
        }
        const double v = std::stod(text);
        const double tw = 2.0 * v;
        if (std::nearbyint(tw) != tw)
            throw domain_error("half-integer '" + text + "': twice the value is not an integer");
        return from_twice(static_cast<int>(tw));
    } catch (const std::invalid_argument&) {
        throw domain_error("half-integer '" + text + "': not a number");
    } catch (const std::out_of_range&) {
        throw domain_error("half-integer '" + text + "': out of range");
    }
}

std::string HalfInt::str() const {
    std::ostringstream os;
    if (twice % 2 == 0)
        os << twice / 2;
    else
        os << twice << "/2";
    return os.str();
}

std::string Su2Context::id() const {
    return "su2(s1=" + s1.str() + ",s2=" + s2.str() + ",M=" + M.str() + ")";
}

std::string Su11Context::id() const {
    std::ostringstream os;
    os << "su11(k1=" << k1 << ",k2=" << k2 << ",N=" << N << ")";
    return os.str();
}

Su2Context make_su2_context(HalfInt s1, HalfInt s2, HalfInt M) {
    if (s1.twice < 0) throw domain_error("s1: must be >= 0, got " + s1.str());
    if (s2.twice < 0) throw domain_error("s2: must be >= 0, got " + s2.str());
    if (!(s1 + s2 + M).integral())
        throw domain_error("M: s1+s2+M must be integral (parity mismatch with the product basis)");
    if (abs(M) > s1 + s2)
        throw domain_error("M: |M| exceeds s1+s2 (" + M.str() + " vs " + (s1 + s2).str() + ")");

    Su2Context c;
    c.s1 = s1;
    c.s2 = s2;
    c.M = M;
    c.sigma1 = std::sqrt(s1.value() * (s1.value() + 1.0));
    c.sigma2 = std::sqrt(s2.value() * (s2.value() + 1.0));
    c.m_min = max(-s2, M - s1);
    c.m_max = min(s2, M + s1);
    c.dim = (c.m_max - c.m_min).twice / 2 + 1;
    c.grid.reserve(static_cast<std::size_t>(c.dim));
    for (HalfInt m = c.m_min; m <= c.m_max; m = m + HalfInt::whole(1)) c.grid.push_back(m.value());
    return c;
}

Su11Context make_su11_context(double k1, double k2, int N) {
    if (!(k1 > 0.0) || !std::isfinite(k1))
        throw domain_error("k1: positive discrete series requires k1 > 0");
    if (!(k2 > 0.0) || !std::isfinite(k2))
        throw domain_error("k2: positive discrete series requires k2 > 0");
    if (N < 0) throw domain_error("N: must be >= 0");

    Su11Context c;
    c.k1 = k1;
    c.k2 = k2;
    c.N = N;
    c.kappa1 = k1 + 0.25 * N;
    c.kappa2 = k2 + 0.25 * N;
    c.dim = N + 1;
    c.grid.reserve(static_cast<std::size_t>(c.dim));
    for (int t = -N; t <= N; t += 2) c.grid.push_back(0.5 * t);
    return c;
}

} // namespace cgasym
