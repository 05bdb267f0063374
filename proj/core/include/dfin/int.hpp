#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dfin {

// Arbitrary-precision integer with value semantics.  Thin RAII wrapper over
// GMP's mpz layer; multiplication is subquadratic, which the evaluation
// routines rely on.
class Int {
public:
    Int() { mpz_init(z_); }
    Int(long v) { mpz_init_set_si(z_, v); }
    explicit Int(std::string_view dec);
    Int(const Int& o) { mpz_init_set(z_, o.z_); }
    Int(Int&& o) noexcept { mpz_init(z_); mpz_swap(z_, o.z_); }
    Int& operator=(const Int& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Int& operator=(Int&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~Int() { mpz_clear(z_); }

    friend Int operator+(const Int& a, const Int& b) {
        Int r;
        mpz_add(r.z_, a.z_, b.z_);
        return r;
    }
    friend Int operator-(const Int& a, const Int& b) {
        Int r;
        mpz_sub(r.z_, a.z_, b.z_);
        return r;
    }
    friend Int operator*(const Int& a, const Int& b) {
        Int r;
        mpz_mul(r.z_, a.z_, b.z_);
        return r;
    }
    Int operator-() const {
        Int r;
        mpz_neg(r.z_, z_);
        return r;
    }
    Int& operator+=(const Int& o) {
        mpz_add(z_, z_, o.z_);
        return *this;
    }
    Int& operator-=(const Int& o) {
        mpz_sub(z_, z_, o.z_);
        return *this;
    }
    Int& operator*=(const Int& o) {
        mpz_mul(z_, z_, o.z_);
        return *this;
    }

    // Quotient of an exact division; the caller guarantees divisibility.
    friend Int divExact(const Int& a, const Int& b) {
        Int r;
        mpz_divexact(r.z_, a.z_, b.z_);
        return r;
    }
    // Floor division and the matching remainder (sign of b).
    friend Int fdivQ(const Int& a, const Int& b) {
        Int r;
        mpz_fdiv_q(r.z_, a.z_, b.z_);
        return r;
    }
    friend Int fdivR(const Int& a, const Int& b) {
        Int r;
        mpz_fdiv_r(r.z_, a.z_, b.z_);
        return r;
    }
    friend Int gcd(const Int& a, const Int& b) {
        Int r;
        mpz_gcd(r.z_, a.z_, b.z_);
        return r;
    }
    friend Int lcm(const Int& a, const Int& b) {
        Int r;
        mpz_lcm(r.z_, a.z_, b.z_);
        return r;
    }
    friend Int abs(const Int& a) {
        Int r;
        mpz_abs(r.z_, a.z_);
        return r;
    }
    Int pow(unsigned long e) const {
        Int r;
        mpz_pow_ui(r.z_, z_, e);
        return r;
    }
    // Floor of the square root; requires *this >= 0.
    Int isqrt() const {
        Int r;
        mpz_sqrt(r.z_, z_);
        return r;
    }
    Int mul2exp(long e) const {  // this * 2^e, e >= 0
        Int r;
        mpz_mul_2exp(r.z_, z_, static_cast<mp_bitcnt_t>(e));
        return r;
    }
    Int fdiv2exp(long e) const {  // floor(this / 2^e)
        Int r;
        mpz_fdiv_q_2exp(r.z_, z_, static_cast<mp_bitcnt_t>(e));
        return r;
    }
    Int cdiv2exp(long e) const {  // ceil(this / 2^e)
        Int r;
        mpz_cdiv_q_2exp(r.z_, z_, static_cast<mp_bitcnt_t>(e));
        return r;
    }

    int sign() const { return mpz_sgn(z_); }
    bool isZero() const { return mpz_sgn(z_) == 0; }
    bool isOne() const { return mpz_cmp_ui(z_, 1) == 0; }
    bool odd() const { return mpz_odd_p(z_) != 0; }
    bool fitsLong() const { return mpz_fits_slong_p(z_) != 0; }
    long toLong() const { return mpz_get_si(z_); }
    double toDouble() const { return mpz_get_d(z_); }
    size_t bits() const { return mpz_sizeinbase(z_, 2); }

    friend int cmp(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_); }
    friend bool operator==(const Int& a, const Int& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Int& a, const Int& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Int& a, const Int& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Int& a, const Int& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Int& a, const Int& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Int& a, const Int& b) { return cmp(a, b) >= 0; }

    bool divisibleBy(const Int& b) const { return mpz_divisible_p(z_, b.z_) != 0; }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Int& v);

    mpz_srcptr raw() const { return z_; }
    mpz_ptr raw() { return z_; }

private:
    mpz_t z_;
};

}  // namespace dfin
