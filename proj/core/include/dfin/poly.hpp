#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dfin {

// Dense univariate polynomial over a field F.  Coefficient index = degree.
// F must provide zero()/one()/fromRat, the four arithmetic operators, unary
// minus, isZero() and ==.  The zero polynomial has degree() == -1, standing
// in for degree -infinity.
template <class F>
class Poly {
public:
    Poly() = default;
    Poly(F constant) {
        if (!constant.isZero()) c_.push_back(std::move(constant));
    }
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(F::one()); }
    static Poly var() { return Poly(std::vector<F>{F::zero(), F::one()}); }
    // c * x^k
    static Poly monomial(F c, int k) {
        if (c.isZero()) return Poly();
        std::vector<F> v(static_cast<size_t>(k) + 1, F::zero());
        v.back() = std::move(c);
        return Poly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool isZero() const { return c_.empty(); }
    bool isConstant() const { return c_.size() <= 1; }
    bool isOne() const { return c_.size() == 1 && c_[0].isOne(); }
    const std::vector<F>& coeffs() const { return c_; }
    const F& lc() const {
        if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    F coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return F::zero();
        return c_[static_cast<size_t>(k)];
    }
    F constantTerm() const { return coeff(0); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        std::vector<F> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        Poly p;
        p.c_ = std::move(r);
        return p;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.isZero() || b.isZero()) return Poly();
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, F::zero());
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const F& s, const Poly& p) {
        if (s.isZero()) return Poly();
        std::vector<F> r(p.c_.size());
        for (size_t i = 0; i < p.c_.size(); ++i) r[i] = s * p.c_[i];
        return Poly(std::move(r));
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned e) const {
        Poly r = one();
        Poly base = *this;
        while (e) {
            if (e & 1u) r = r * base;
            base = base * base;
            e >>= 1u;
        }
        return r;
    }

    // Euclidean division; b must be nonzero.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.isZero()) throw std::domain_error("polynomial division by zero");
        Poly q, r = a;
        const F lcInv = F::one() / b.lc();
        while (!r.isZero() && r.degree() >= b.degree()) {
            int k = r.degree() - b.degree();
            F t = r.lc() * lcInv;
            q += monomial(t, k);
            r -= monomial(std::move(t), k) * b;
        }
        return {q, r};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    Poly monic() const {
        if (isZero()) return *this;
        return (F::one() / lc()) * *this;
    }

    friend Poly gcd(const Poly& a, const Poly& b) {
        Poly x = a, y = b;
        while (!y.isZero()) {
            Poly r = x % y;
            x = std::move(y);
            y = std::move(r);
        }
        return x.monic();
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<F> r(c_.size() - 1);
        F k = F::one();
        for (size_t i = 1; i < c_.size(); ++i) {
            r[i - 1] = k * c_[i];
            k = k + F::one();
        }
        return Poly(std::move(r));
    }

    F eval(const F& x) const {
        F acc = F::zero();
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // p(x + a): Taylor coefficients of p at a, by repeated synthetic division.
    Poly shiftArg(const F& a) const {
        if (a.isZero() || isZero()) return *this;
        std::vector<F> w = c_;
        std::vector<F> out;
        out.reserve(c_.size());
        while (!w.empty()) {
            for (size_t i = w.size() - 1; i-- > 0;) w[i] = w[i] + a * w[i + 1];
            out.push_back(w.front());
            w.erase(w.begin());
        }
        return Poly(std::move(out));
    }

    // Substitute x -> s*x (s a field element).
    Poly scaleArg(const F& s) const {
        std::vector<F> r = c_;
        F p = F::one();
        for (size_t i = 1; i < r.size(); ++i) {
            p = p * s;
            r[i] = r[i] * p;
        }
        return Poly(std::move(r));
    }

    // x^deg * p(1/x)
    Poly reverse() const {
        std::vector<F> r(c_.rbegin(), c_.rend());
        return Poly(std::move(r));
    }

    // Substitute x -> g(x).
    Poly compose(const Poly& g) const {
        Poly acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * g + Poly(c_[i]);
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().isZero()) c_.pop_back();
    }
    std::vector<F> c_;
};

// Extended Euclid: returns (g, u, v), g monic, with u*a + v*b = g.
template <class F>
struct XgcdResult {
    Poly<F> g, u, v;
};

template <class F>
XgcdResult<F> polyXgcd(const Poly<F>& a, const Poly<F>& b) {
    if (a.isZero() && b.isZero()) throw std::domain_error("gcd of zero pair");
    Poly<F> r0 = a, r1 = b;
    Poly<F> u0 = Poly<F>::one(), u1 = Poly<F>::zero();
    Poly<F> v0 = Poly<F>::zero(), v1 = Poly<F>::one();
    while (!r1.isZero()) {
        auto [q, r] = divmod(r0, r1);
        Poly<F> u2 = u0 - q * u1;
        Poly<F> v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    const F s = F::one() / r0.lc();
    return {s * r0, s * u0, s * v0};
}

// Resultant via the Euclidean remainder sequence.
template <class F>
F resultant(Poly<F> a, Poly<F> b) {
    if (a.isZero() || b.isZero()) return F::zero();
    F acc = F::one();
    bool negate = false;
    while (b.degree() > 0) {
        Poly<F> r = a % b;
        int da = a.degree(), db = b.degree(), dr = r.isZero() ? -1 : r.degree();
        if ((da & 1) && (db & 1)) negate = !negate;
        if (r.isZero()) return F::zero();
        // res(a,b) = (-1)^(da*db) lc(b)^(da-dr) res(b,r)
        F lcPow = F::one();
        for (int i = 0; i < da - dr; ++i) lcPow = lcPow * b.lc();
        acc = acc * lcPow;
        a = std::move(b);
        b = std::move(r);
    }
    // b is a nonzero constant: res(a, c) = c^deg(a)
    F cPow = F::one();
    for (int i = 0; i < a.degree(); ++i) cPow = cPow * b.lc();
    acc = acc * cPow;
    return negate ? -acc : acc;
}

// Largest k with gcd^k dividing; here just f / gcd(f, f') -- the squarefree part.
template <class F>
Poly<F> squarefreePart(const Poly<F>& f) {
    if (f.degree() <= 0) return f.monic();
    Poly<F> g = gcd(f, f.derivative());
    if (g.degree() <= 0) return f.monic();
    return (f / g).monic();
}

}  // namespace dfin
