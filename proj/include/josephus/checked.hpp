#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "josephus/errors.hpp"

// Overflow-checked unsigned 64-bit arithmetic. Products and sums are formed in
// 128-bit intermediates and narrowed with a range check.

namespace josephus::checked {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 narrow(u128 v, const char* what) {
    if (v > std::numeric_limits<u64>::max()) {
        throw ArithmeticError(std::string("overflow in ") + what);
    }
    return static_cast<u64>(v);
}

inline u64 add(u64 a, u64 b) { return narrow(u128(a) + b, "add"); }

inline u64 mul(u64 a, u64 b) { return narrow(u128(a) * b, "mul"); }

inline u64 sub(u64 a, u64 b) {
    if (b > a) throw ArithmeticError("underflow in sub");
    return a - b;
}

inline u64 exact_div(u64 a, u64 b, const char* what) {
    if (b == 0 || a % b != 0) {
        throw ArithmeticError(std::string("inexact division in ") + what);
    }
    return a / b;
}

/// Largest e >= 0 with coeff * base^e <= bound, found by repeated
/// multiplication. Requires coeff <= bound and base >= 2.
struct PowerFit {
    u64 exponent = 0;
    u64 power = 1;  // base^exponent
};

inline PowerFit largest_power_at_most(u64 coeff, u64 base, u64 bound) {
    PowerFit fit;
    u128 scaled = coeff;
    while (scaled * base <= bound) {  // scaled <= 2^64, base < 2^64: no 128-bit wrap
        scaled *= base;
        fit.power = narrow(u128(fit.power) * base, "power");
        ++fit.exponent;
    }
    return fit;
}

}  // namespace josephus::checked
