#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "dfin/poly.hpp"

namespace dfin {

// Reduced fraction of two Poly<F>: gcd(num, den) = 1 and den monic.
template <class F>
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly<F>::one()) {}
    RatFunc(F constant) : num_(std::move(constant)), den_(Poly<F>::one()) {}
    RatFunc(Poly<F> num) : num_(std::move(num)), den_(Poly<F>::one()) {}
    RatFunc(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(Poly<F>::one()); }
    static RatFunc var() { return RatFunc(Poly<F>::var()); }
    static RatFunc fromRat(const Rat& r) { return RatFunc(Poly<F>(F::fromRat(r))); }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }
    bool isZero() const { return num_.isZero(); }
    bool isOne() const { return num_.isOne() && den_.isOne(); }
    bool isPolynomial() const { return den_.isOne(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.isZero()) throw std::domain_error("rational function division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inv() const {
        if (isZero()) throw std::domain_error("rational function division by zero");
        return RatFunc(den_, num_);
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    F eval(const F& x) const {
        F d = den_.eval(x);
        if (d.isZero()) throw std::domain_error("evaluation at a pole");
        return num_.eval(x) / d;
    }

    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    RatFunc shiftArg(const F& a) const { return RatFunc(num_.shiftArg(a), den_.shiftArg(a)); }

private:
    void normalize() {
        if (den_.isZero()) throw std::domain_error("division by zero polynomial");
        if (num_.isZero()) {
            den_ = Poly<F>::one();
            return;
        }
        Poly<F> g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        const F s = F::one() / den_.lc();
        num_ = s * num_;
        den_ = s * den_;
    }
    Poly<F> num_;
    Poly<F> den_;
};

}  // namespace dfin
