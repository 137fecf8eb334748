#include "cgasym/stretched.hpp"

#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "cgasym/errors.hpp"

namespace cgasym {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

struct StretchedArgs {
    // All factorial arguments, as plain integers (parity pre-checked).
    long two_s1, two_s2, s_sum;           // 2s1, 2s2, s1+s2
    long s1pm, s1mm, s2pm, s2mm;          // s1+-m, s2+-m
    bool vanishes;                        // |m| > min(s1, s2)
};

StretchedArgs check_args(HalfInt s1, HalfInt s2, HalfInt m) {
    if (s1.twice < 0 || s2.twice < 0)
        throw domain_error("stretched_cg: s1, s2 must be >= 0");
    if ((s1.twice + m.twice) % 2 != 0)
        throw domain_error("stretched_cg: s1+m not integral (parity mismatch)");
    if ((s2.twice + m.twice) % 2 != 0)
        throw domain_error("stretched_cg: s2+m not integral (parity mismatch)");
    StretchedArgs a{};
    a.two_s1 = s1.twice;
    a.two_s2 = s2.twice;
    a.s_sum = (s1.twice + s2.twice) / 2;
    a.s1pm = (s1.twice + m.twice) / 2;
    a.s1mm = (s1.twice - m.twice) / 2;
    a.s2pm = (s2.twice + m.twice) / 2;
    a.s2mm = (s2.twice - m.twice) / 2;
    a.vanishes = a.s1pm < 0 || a.s1mm < 0 || a.s2pm < 0 || a.s2mm < 0;
    return a;
}

cpp_int big_factorial(long n) {
    cpp_int r = 1;
    for (long k = 2; k <= n; ++k) r *= k;
    return r;
}

double log_factorial(long n) { return std::lgamma(static_cast<double>(n) + 1.0); }

} // namespace

double stretched_cg_exact_rational(HalfInt s1, HalfInt s2, HalfInt m) {
    const auto a = check_args(s1, s2, m);
    if (a.vanishes) return 0.0;
    const cpp_int num = big_factorial(a.two_s1) * big_factorial(a.two_s2) *
                        big_factorial(a.s_sum) * big_factorial(a.s_sum);
    const cpp_int den = big_factorial(a.two_s1 + a.two_s2) * big_factorial(a.s1pm) *
                        big_factorial(a.s1mm) * big_factorial(a.s2pm) * big_factorial(a.s2mm);
    const cpp_rational ratio(num, den);
    return std::sqrt(ratio.convert_to<double>());
}

double stretched_cg_log(HalfInt s1, HalfInt s2, HalfInt m) {
    const auto a = check_args(s1, s2, m);
    if (a.vanishes) return 0.0;
    const double log_ratio = log_factorial(a.two_s1) + log_factorial(a.two_s2) +
                             2.0 * log_factorial(a.s_sum) - log_factorial(a.two_s1 + a.two_s2) -
                             log_factorial(a.s1pm) - log_factorial(a.s1mm) -
                             log_factorial(a.s2pm) - log_factorial(a.s2mm);
    return std::exp(0.5 * log_ratio);
}

double stretched_cg_exact(HalfInt s1, HalfInt s2, HalfInt m) {
    if ((s1 + s2).twice <= 80) return stretched_cg_exact_rational(s1, s2, m);
    return stretched_cg_log(s1, s2, m);
}

double stretched_cg_asymptotic(HalfInt s1, HalfInt s2, HalfInt m) {
    if (s1.twice <= 0 || s2.twice <= 0)
        throw domain_error("stretched_cg_asymptotic: s1, s2 must be > 0");
    const double v1 = s1.value();
    const double v2 = s2.value();
    const double mv = m.value();
    const double ratio = (v1 + v2) / (v1 * v2);
    return std::pow(ratio / M_PI, 0.25) * std::exp(-0.5 * mv * mv * ratio);
}

} // namespace cgasym
