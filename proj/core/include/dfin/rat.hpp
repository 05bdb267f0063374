#pragma once

#include <gmp.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "dfin/int.hpp"

namespace dfin {

// Exact rational number, always in lowest terms with positive denominator.
class Rat {
public:
    Rat() { mpq_init(q_); }
    Rat(long v) {
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    Rat(long n, long d);
    Rat(const Int& n) {
        mpq_init(q_);
        mpq_set_z(q_, n.raw());
    }
    Rat(const Int& n, const Int& d);
    // Accepts "n" or "n/d".
    explicit Rat(std::string_view text);
    Rat(const Rat& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rat(Rat&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rat& operator=(const Rat& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rat& operator=(Rat&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rat() { mpq_clear(q_); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        Rat r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        Rat r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        Rat r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rat operator/(const Rat& a, const Rat& b);
    Rat operator-() const {
        Rat r;
        mpq_neg(r.q_, q_);
        return r;
    }
    Rat& operator+=(const Rat& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rat& operator-=(const Rat& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rat& operator*=(const Rat& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    Rat inv() const;
    Rat abs() const {
        Rat r;
        mpq_abs(r.q_, q_);
        return r;
    }
    Rat pow(long e) const;

    int sign() const { return mpq_sgn(q_); }
    bool isZero() const { return mpq_sgn(q_) == 0; }
    bool isOne() const { return mpq_cmp_ui(q_, 1, 1) == 0; }
    bool isInteger() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

    Int num() const {
        Int n;
        mpz_set(n.raw(), mpq_numref(q_));
        return n;
    }
    Int den() const {
        Int d;
        mpz_set(d.raw(), mpq_denref(q_));
        return d;
    }
    Int floor() const {
        Int r;
        mpz_fdiv_q(r.raw(), mpq_numref(q_), mpq_denref(q_));
        return r;
    }
    Int ceil() const {
        Int r;
        mpz_cdiv_q(r.raw(), mpq_numref(q_), mpq_denref(q_));
        return r;
    }

    friend int cmp(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_); }
    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a, b) >= 0; }

    double toDouble() const { return mpq_get_d(q_); }

    // "n" when the denominator is 1, otherwise "n/d".
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Rat& v);

    static Rat zero() { return Rat(); }
    static Rat one() { return Rat(1); }
    static Rat fromRat(const Rat& r) { return r; }

    mpq_srcptr raw() const { return q_; }
    mpq_ptr raw() { return q_; }

private:
    mpq_t q_;
};

}  // namespace dfin
