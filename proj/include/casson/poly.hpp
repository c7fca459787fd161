#pragma once

// Dense univariate polynomials over an exact ring R, used at two levels:
//   Poly<BigInt>        -- integer polynomials (variable t or m)
//   Poly<Poly<BigInt>>  -- bivariate, outer variable t with coefficients in Z[m]
//
// Everything is fraction-free: gcds run a primitive PRS, resultants run the
// subresultant scheme, and exact divisions throw if a division is not exact.

#include "casson/rational.hpp"

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace casson {

template <class R>
class Poly;

// ---- ring helpers on the coefficient type ---------------------------------

inline bool ring_is_zero(const BigInt& a) { return a.is_zero(); }
inline int  ring_sign(const BigInt& a) { return a < 0 ? -1 : 1; }
inline BigInt ring_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}
inline BigInt ring_exact_div(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (!r.is_zero())
        throw std::logic_error("inexact integer division");
    return q;
}

// ---- polynomial type --------------------------------------------------------

template <class R>
class Poly {
public:
    Poly() = default;
    explicit Poly(const R& c) {
        if (!ring_is_zero(c)) c_.push_back(c);
    }
    explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }

    static Poly monomial(const R& c, int k) {
        Poly p;
        if (ring_is_zero(c)) return p;
        p.c_.assign(static_cast<size_t>(k) + 1, R(0));
        p.c_.back() = c;
        return p;
    }
    static Poly variable() { return monomial(R(1), 1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const R& lead() const {
        assert(!c_.empty());
        return c_.back();
    }
    R coeff(int k) const {
        if (k < 0 || k > degree()) return R(0);
        return c_[static_cast<size_t>(k)];
    }
    const std::vector<R>& coeffs() const { return c_; }

    Poly operator-() const {
        Poly p(*this);
        for (auto& c : p.c_) c = -c;
        return p;
    }
    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly p;
        p.c_.resize(std::max(a.c_.size(), b.c_.size()), R(0));
        for (size_t i = 0; i < a.c_.size(); ++i) p.c_[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) p.c_[i] = p.c_[i] + b.c_[i];
        p.trim();
        return p;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly p;
        if (a.is_zero() || b.is_zero()) return p;
        p.c_.assign(a.c_.size() + b.c_.size() - 1, R(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (ring_is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                p.c_[i + j] = p.c_[i + j] + a.c_[i] * b.c_[j];
        }
        p.trim();
        return p;
    }
    friend Poly operator*(const Poly& a, const R& s) {
        Poly p(a);
        if (ring_is_zero(s)) return Poly();
        for (auto& c : p.c_) c = c * s;
        p.trim();
        return p;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // multiply by x^k
    Poly shifted(int k) const {
        assert(k >= 0);
        if (is_zero()) return Poly();
        Poly p;
        p.c_.assign(c_.size() + static_cast<size_t>(k), R(0));
        std::copy(c_.begin(), c_.end(), p.c_.begin() + k);
        return p;
    }

private:
    void trim() {
        while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<R> c_;
};

using Poly1 = Poly<BigInt>;
using Poly2 = Poly<Poly1>; // outer variable t, inner variable m

template <class R>
bool ring_is_zero(const Poly<R>& p) { return p.is_zero(); }
template <class R>
int ring_sign(const Poly<R>& p) { return p.is_zero() ? 1 : ring_sign(p.lead()); }

// exact division by a scalar from R, coefficientwise
template <class R>
Poly<R> exact_div_scalar(const Poly<R>& p, const R& s) {
    std::vector<R> out;
    out.reserve(static_cast<size_t>(p.degree() + 1));
    for (int i = 0; i <= p.degree(); ++i) out.push_back(ring_exact_div(p.coeff(i), s));
    return Poly<R>(std::move(out));
}

// exact polynomial division: a = q*b, throws if the remainder is nonzero
template <class R>
Poly<R> ring_exact_div(const Poly<R>& a, const Poly<R>& b) {
    if (b.is_zero()) throw std::logic_error("polynomial division by zero");
    if (a.is_zero()) return Poly<R>();
    Poly<R> rem = a, q;
    std::vector<R> qc(static_cast<size_t>(std::max(0, a.degree() - b.degree() + 1)), R(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        R c = ring_exact_div(rem.lead(), b.lead());
        int k = rem.degree() - b.degree();
        qc[static_cast<size_t>(k)] = c;
        rem = rem - b.shifted(k) * c;
    }
    if (!rem.is_zero()) throw std::logic_error("inexact polynomial division");
    return Poly<R>(std::move(qc));
}

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + prem(a,b)
template <class R>
Poly<R> prem(Poly<R> a, const Poly<R>& b) {
    assert(!b.is_zero() && a.degree() >= b.degree());
    const R lb = b.lead();
    int e = a.degree() - b.degree() + 1;
    while (!a.is_zero() && a.degree() >= b.degree()) {
        a = a * lb - b.shifted(a.degree() - b.degree()) * a.lead();
        --e;
    }
    if (e > 0) a = a * ring_pow(lb, e);
    return a;
}

template <class R>
R content(const Poly<R>& p) {
    R g(0);
    for (int i = 0; i <= p.degree(); ++i)
        if (!ring_is_zero(p.coeff(i))) g = ring_gcd(g, p.coeff(i));
    return g;
}

// content removed and leading coefficient sign-normalized
template <class R>
Poly<R> primitive_part(const Poly<R>& p) {
    if (p.is_zero()) return p;
    R c = content(p);
    if (ring_sign(p.lead()) < 0) c = -c;
    return exact_div_scalar(p, c);
}

// UFD gcd (content times primitive gcd), primitive PRS on the primitive parts
template <class R>
Poly<R> ring_gcd(const Poly<R>& a0, const Poly<R>& b0) {
    if (a0.is_zero()) return primitive_part(b0) * content(b0);
    if (b0.is_zero()) return primitive_part(a0) * content(a0);
    R cg = ring_gcd(content(a0), content(b0));
    Poly<R> a = primitive_part(a0), b = primitive_part(b0);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        Poly<R> r = prem(a, b);
        a = b;
        b = primitive_part(r);
    }
    Poly<R> g = primitive_part(a);
    return g * cg;
}

// gcd over Q: primitive with positive leading coefficient; gcd(0,0) = 0
template <class R>
Poly<R> poly_gcd(const Poly<R>& a, const Poly<R>& b) {
    if (a.is_zero() && b.is_zero()) return Poly<R>();
    return primitive_part(ring_gcd(a, b));
}

template <class R>
Poly<R> derivative(const Poly<R>& p) {
    std::vector<R> out;
    for (int i = 1; i <= p.degree(); ++i) out.push_back(p.coeff(i) * R(i));
    return Poly<R>(std::move(out));
}

// P / gcd(P, P'), primitive with positive leading coefficient
template <class R>
Poly<R> squarefree_part(const Poly<R>& p) {
    if (p.is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
    Poly<R> pp = primitive_part(p);
    if (pp.degree() == 0) return pp;
    Poly<R> g = poly_gcd(pp, derivative(pp));
    return primitive_part(ring_exact_div(pp, g));
}

// Subresultant resultant (fraction-free).  Sylvester-determinant sign
// convention: res(a,b) = lc(a)^deg(b) * prod b(alpha_i) over roots of a.
template <class R>
R resultant(Poly<R> a, Poly<R> b) {
    if (a.is_zero() || b.is_zero()) return R(0);
    int s = 1;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
        std::swap(a, b);
    }
    if (b.degree() == 0) {
        R r = ring_pow(b.lead(), a.degree());
        return s < 0 ? -r : r;
    }
    R g(1), h(1);
    while (true) {
        int d = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
        Poly<R> r = prem(a, b);
        a = b;
        b = exact_div_scalar(r, g * ring_pow(h, d));
        g = a.lead();
        if (d > 0) h = ring_exact_div(ring_pow(g, d), ring_pow(h, d - 1));
        if (b.is_zero()) return R(0);
        if (b.degree() == 0) break;
    }
    R res = ring_exact_div(ring_pow(b.lead(), a.degree()), ring_pow(h, a.degree() - 1));
    return s < 0 ? -res : res;
}

// ---- Poly1 specifics --------------------------------------------------------

inline BigRat eval_rat(const Poly1& p, const BigRat& x) {
    BigRat acc(0);
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + BigRat(p.coeff(i));
    return acc;
}

// exact division by (den*x - num); requires gcd(num,den)=1 and an exact quotient
inline Poly1 divide_linear(const Poly1& p, const BigInt& num, const BigInt& den) {
    std::vector<BigRat> q(static_cast<size_t>(std::max(0, p.degree())), BigRat(0));
    BigRat carry(0);
    // synthetic division against root num/den, tracking the den scaling
    for (int i = p.degree(); i >= 1; --i) {
        BigRat c = BigRat(p.coeff(i)) + carry;
        BigRat qc = c / BigRat(den);
        q[static_cast<size_t>(i - 1)] = qc;
        carry = qc * BigRat(num);
    }
    if (BigRat(p.coeff(0)) + carry != 0)
        throw std::logic_error("divide_linear: not a root");
    std::vector<BigInt> qi;
    qi.reserve(q.size());
    for (const auto& c : q) qi.push_back(to_integer(c));
    return Poly1(std::move(qi));
}

// deg(P) minus the total multiplicity of roots at the excluded rational points
inline long count_roots_with_multiplicity(const Poly1& p, const std::vector<BigRat>& exclude) {
    if (p.is_zero()) throw std::domain_error("root count of the zero polynomial");
    long count = p.degree();
    Poly1 cur = p;
    for (const auto& a : exclude) {
        BigInt num = rat_num(a), den = rat_den(a);
        while (cur.degree() > 0 && eval_rat(cur, a) == 0) {
            cur = divide_linear(cur, num, den);
            --count;
        }
    }
    return count;
}

inline std::string to_string(const Poly1& p, const std::string& var = "t") {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        BigInt c = p.coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        BigInt a = abs(c);
        if (a != 1 || i == 0) os << a.str();
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

inline std::string to_string(const Poly2& p, const std::string& outer = "t",
                             const std::string& inner = "m") {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        if (p.coeff(i).is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << to_string(p.coeff(i), inner) << ")";
        if (i > 0) {
            os << outer;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

} // namespace casson
