#pragma once

// Exact integer and rational scalars for the whole library.
// All invariant values are rationals; nothing here is ever rounded.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace casson {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const BigRat& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const BigRat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const BigRat& r) { return rat_den(r) == 1; }

// Requires an integral rational; used where a formula promises an integer.
inline BigInt to_integer(const BigRat& r) {
    if (!is_integer(r))
        throw std::logic_error("expected an integral value, got " + r.str());
    return rat_num(r);
}

template <class R>
R ring_pow(R base, long e) {
    R out(1);
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

struct size_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct indeterminate_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace casson
