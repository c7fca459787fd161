#pragma once

// Seifert fibered homology spheres Sigma(a_1,...,a_n): closed-form invariants
// and the connected-sum rule for rational homology spheres.

#include "casson/rational.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace casson {

struct SeifertTuple {
    std::vector<long> a; // sorted ascending, n >= 3 after padding with 1s

    explicit SeifertTuple(std::vector<long> entries) : a(std::move(entries)) {
        for (long v : a)
            if (v < 1) throw std::domain_error("Seifert multiplicities must be positive");
        while (a.size() < 3) a.push_back(1);
        std::sort(a.begin(), a.end());
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = i + 1; j < a.size(); ++j)
                if (std::gcd(a[i], a[j]) != 1)
                    throw std::domain_error("multiplicities must be pairwise coprime: gcd(" +
                                            std::to_string(a[i]) + "," + std::to_string(a[j]) +
                                            ") > 1");
    }

    size_t size() const { return a.size(); }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < a.size(); ++i)
            s += (i ? "," : "") + std::to_string(a[i]);
        return s + ")";
    }
};

// lambda(Sigma(a_1,...,a_n)) = sigma_3(a_1-1,...,a_n-1) / 4
inline BigRat lambda_seifert(const SeifertTuple& t) {
    // elementary symmetric polynomial of degree 3 via the running products
    BigInt e1(0), e2(0), e3(0);
    for (long v : t.a) {
        BigInt x(v - 1);
        e3 += e2 * x;
        e2 += e1 * x;
        e1 += x;
    }
    return BigRat(e3) / 4;
}

// mu(a_1,...,a_n) = prod (a_i - 1)
inline BigInt milnor_number(const SeifertTuple& t) {
    BigInt m(1);
    for (long v : t.a) m *= (v - 1);
    return m;
}

// sum of Euler characteristics over the top-dimensional character-variety
// components: (n-1)(n-2) 2^(n-6) mu
inline BigInt euler_top_sum(const SeifertTuple& t) {
    long n = static_cast<long>(t.size());
    BigRat v = BigRat(BigInt(n - 1) * BigInt(n - 2)) * BigRat(milnor_number(t));
    if (n >= 6)
        v *= BigRat(ring_pow(BigInt(2), n - 6));
    else
        v /= BigRat(ring_pow(BigInt(2), 6 - n));
    return to_integer(v);
}

// |H_1(K(p/q); Z_2)| for surgery on a knot in a homology sphere
inline int h1z2_of_surgery(long p) {
    if (p == 0)
        throw std::domain_error("0-surgery is not a rational homology sphere");
    return (p % 2 == 0) ? 2 : 1;
}

struct SumPiece {
    BigRat lambda;
    BigInt h1z2{1};
};

// lambda(S1 # S2) = h2*lambda1 + h1*lambda2, folded left over the pieces;
// the fold also multiplies the |H_1(.;Z_2)| orders
inline BigRat lambda_connected_sum(const std::vector<SumPiece>& pieces) {
    if (pieces.empty())
        throw std::domain_error("connected sum of no pieces");
    BigRat lam = pieces[0].lambda;
    BigInt h = pieces[0].h1z2;
    for (size_t i = 1; i < pieces.size(); ++i) {
        lam = BigRat(pieces[i].h1z2) * lam + BigRat(h) * pieces[i].lambda;
        h *= pieces[i].h1z2;
    }
    return lam;
}

// coefficients b_i with sum_i b_i * prod_{j != i} a_j = 1 (not unique)
inline std::vector<BigInt> seifert_coefficients(const SeifertTuple& t) {
    size_t n = t.size();
    std::vector<BigInt> A(n, BigInt(1));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (j != i) A[i] *= t.a[j];
    // iterated extended Euclid over the A_i (their gcd is 1 by coprimality)
    std::vector<BigInt> b(n, BigInt(0));
    BigInt g = A[0];
    b[0] = 1;
    for (size_t i = 1; i < n; ++i) {
        BigInt x0(1), y0(0), x1(0), y1(1), r0 = g, r1 = A[i];
        while (r1 != 0) {
            BigInt q = r0 / r1;
            BigInt r2 = r0 - q * r1;
            r0 = r1; r1 = r2;
            BigInt x2 = x0 - q * x1, y2 = y0 - q * y1;
            x0 = x1; x1 = x2;
            y0 = y1; y1 = y2;
        }
        for (size_t k = 0; k < i; ++k) b[k] *= x0;
        b[i] = y0;
        g = r0;
    }
    if (g != 1)
        throw std::logic_error("Seifert coefficient system has no solution");
    return b;
}

} // namespace casson
