#pragma once

// Tiny 2x2 matrix over any ring-like scalar; used with bivariate Laurent
// entries for symbolic representations and with complex doubles for the
// numeric ones.

namespace casson {

template <class T>
struct Mat2 {
    T a{}, b{}, c{}, d{};

    static Mat2 identity(const T& one) { return {one, T{}, T{}, one}; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend Mat2 operator+(const Mat2& x, const Mat2& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }

    T trace() const { return a + d; }
    T det() const { return a * d - b * c; }
};

} // namespace casson
