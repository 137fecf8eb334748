#pragma once

#include <compare>
#include <string>

namespace cgasym {

// Half-integer stored as a doubled integer, so arithmetic and parity
// checks stay exact.  HalfInt::from_twice(7) represents 7/2.
struct HalfInt {
    int twice = 0;

    constexpr HalfInt() = default;

    static constexpr HalfInt from_twice(int t) {
        HalfInt h;
        h.twice = t;
        return h;
    }
    static constexpr HalfInt whole(int n) { return from_twice(2 * n); }

    constexpr bool integral() const { return twice % 2 == 0; }
    constexpr double value() const { return 0.5 * static_cast<double>(twice); }

    constexpr HalfInt operator-() const { return from_twice(-twice); }
    constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice + o.twice); }
    constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice - o.twice); }

    constexpr auto operator<=>(const HalfInt&) const = default;

    // "3/2", "-1/2", "2", "0.5" are all accepted.
    static HalfInt parse(const std::string& text);

    // "3/2" for odd twice, plain integer otherwise.
    std::string str() const;
};

constexpr HalfInt min(HalfInt a, HalfInt b) { return a.twice <= b.twice ? a : b; }
constexpr HalfInt max(HalfInt a, HalfInt b) { return a.twice >= b.twice ? a : b; }
constexpr HalfInt abs(HalfInt a) { return a.twice < 0 ? -a : a; }

} // namespace cgasym
