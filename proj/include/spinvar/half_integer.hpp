#pragma once

#include <compare>
#include <string>

#include "spinvar/errors.hpp"

namespace spinvar {

// Exact half-integer quantum number, stored as twice its value so that
// j = 3/2 is the integer 3.  Keeps basis indexing free of float equality.
class HalfInteger {
public:
    constexpr HalfInteger() = default;
    static constexpr HalfInteger from_twice(int twice) { return HalfInteger(twice); }
    static constexpr HalfInteger from_int(int n) { return HalfInteger(2 * n); }

    constexpr int twice() const { return twice_; }
    constexpr double value() const { return 0.5 * twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

private:
    explicit constexpr HalfInteger(int twice) : twice_(twice) {}
    int twice_ = 0;
};

// m is valid within spin j when |2m| <= 2j and both have the same parity.
inline bool valid_m(HalfInteger j, HalfInteger m) {
    const int tj = j.twice(), tm = m.twice();
    return tm >= -tj && tm <= tj && ((tj - tm) % 2 == 0);
}

inline void require_valid_jm(HalfInteger j, HalfInteger m) {
    if (j.twice() < 0)
        throw input_error("spin j must be nonnegative, got " + j.str());
    if (!valid_m(j, m))
        throw input_error("m = " + m.str() + " is not a valid projection for j = " + j.str());
}

// j(j+1), the Casimir eigenvalue of the irrep.
inline double casimir(HalfInteger j) {
    const double v = j.value();
    return v * (v + 1.0);
}

} // namespace spinvar
