#pragma once

// Integer Laurent polynomials in mu with a second ordinary variable t:
//    value = mu^shift * body(m, t),   body in Z[m][t] with minimal m-degree 0.
// Carrier for symbolic SL2 representations of two-generator knot groups.

#include "casson/mat2.hpp"
#include "casson/poly.hpp"

#include <utility>

namespace casson {

// index of the lowest nonzero coefficient; p must be nonzero
template <class R>
int min_degree(const Poly<R>& p) {
    for (int i = 0; i <= p.degree(); ++i)
        if (!ring_is_zero(p.coeff(i))) return i;
    return -1;
}

// divide by x^k, asserting the low-order coefficients vanish
template <class R>
Poly<R> down_shifted(const Poly<R>& p, int k) {
    if (k == 0 || p.is_zero()) return p;
    std::vector<R> out;
    for (int i = 0; i < k; ++i) assert(ring_is_zero(p.coeff(i)));
    for (int i = k; i <= p.degree(); ++i) out.push_back(p.coeff(i));
    return Poly<R>(std::move(out));
}

class Laurent2 {
public:
    Laurent2() = default;

    static Laurent2 monomial(const BigInt& c, int mu_exp, int t_exp) {
        Laurent2 f;
        if (c.is_zero()) return f;
        f.shift_ = mu_exp;
        f.body_ = Poly2::monomial(Poly1(c), t_exp);
        return f;
    }
    static Laurent2 one() { return monomial(1, 0, 0); }

    bool is_zero() const { return body_.is_zero(); }
    int mu_shift() const { return shift_; }
    const Poly2& body() const { return body_; }

    friend Laurent2 operator+(const Laurent2& x, const Laurent2& y) {
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        int s = std::min(x.shift_, y.shift_);
        Laurent2 f;
        f.shift_ = s;
        f.body_ = up(x.body_, x.shift_ - s) + up(y.body_, y.shift_ - s);
        f.normalize();
        return f;
    }
    friend Laurent2 operator-(const Laurent2& x, const Laurent2& y) { return x + (-y); }
    Laurent2 operator-() const {
        Laurent2 f(*this);
        f.body_ = -f.body_;
        return f;
    }
    friend Laurent2 operator*(const Laurent2& x, const Laurent2& y) {
        Laurent2 f;
        if (x.is_zero() || y.is_zero()) return f;
        f.shift_ = x.shift_ + y.shift_;
        f.body_ = x.body_ * y.body_;
        f.normalize();
        return f;
    }
    friend bool operator==(const Laurent2& x, const Laurent2& y) {
        return x.shift_ == y.shift_ && x.body_ == y.body_;
    }
    friend bool operator!=(const Laurent2& x, const Laurent2& y) { return !(x == y); }

    // substitute mu = +1 or -1, leaving a polynomial in t
    Poly1 at_mu(int mu) const {
        assert(mu == 1 || mu == -1);
        std::vector<BigInt> out(static_cast<size_t>(body_.degree() + 1), BigInt(0));
        for (int i = 0; i <= body_.degree(); ++i) {
            const Poly1& cm = body_.coeff(i);
            BigInt v(0);
            for (int j = 0; j <= cm.degree(); ++j) {
                BigInt c = cm.coeff(j);
                if ((mu == -1) && ((j + shift_) & 1)) c = -c;
                v += c;
            }
            out[static_cast<size_t>(i)] = v;
        }
        return Poly1(std::move(out));
    }

    // the substitution mu -> mu^{-1}
    Laurent2 mu_inverted() const {
        Laurent2 f;
        for (int i = 0; i <= body_.degree(); ++i) {
            const Poly1& cm = body_.coeff(i);
            for (int j = 0; j <= cm.degree(); ++j)
                if (!cm.coeff(j).is_zero())
                    f = f + monomial(cm.coeff(j), -(j + shift_), i);
        }
        return f;
    }

    bool mu_symmetric() const { return *this == mu_inverted(); }

private:
    static Poly2 up(const Poly2& p, int k) {
        if (k == 0) return p;
        std::vector<Poly1> out;
        for (int i = 0; i <= p.degree(); ++i) out.push_back(p.coeff(i).shifted(k));
        return Poly2(std::move(out));
    }
    void normalize() {
        if (body_.is_zero()) {
            shift_ = 0;
            return;
        }
        int d = -1;
        for (int i = 0; i <= body_.degree(); ++i) {
            if (body_.coeff(i).is_zero()) continue;
            int md = min_degree(body_.coeff(i));
            if (d < 0 || md < d) d = md;
        }
        if (d > 0) {
            std::vector<Poly1> out;
            for (int i = 0; i <= body_.degree(); ++i)
                out.push_back(body_.coeff(i).is_zero() ? Poly1()
                                                       : down_shifted(body_.coeff(i), d));
            body_ = Poly2(std::move(out));
            shift_ += d;
        }
    }

    int shift_ = 0;
    Poly2 body_;
};

using LaurentMat2 = Mat2<Laurent2>;

inline LaurentMat2 laurent_identity() { return LaurentMat2::identity(Laurent2::one()); }

} // namespace casson
