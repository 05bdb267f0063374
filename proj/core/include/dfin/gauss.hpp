#pragma once

#include <iosfwd>
#include <string>

#include "dfin/rat.hpp"

namespace dfin {

// Gaussian rational a + b*i, both parts exact.
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(Rat re) : re_(std::move(re)) {}
    GaussRat(long v) : re_(v) {}
    GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b);
    GaussRat operator-() const { return {-re_, -im_}; }
    GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
    GaussRat& operator-=(const GaussRat& o) { return *this = *this - o; }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
    GaussRat& operator/=(const GaussRat& o) { return *this = *this / o; }

    GaussRat conj() const { return {re_, -im_}; }
    Rat normSq() const { return re_ * re_ + im_ * im_; }
    GaussRat inv() const;

    bool isZero() const { return re_.isZero() && im_.isZero(); }
    bool isOne() const { return re_.isOne() && im_.isZero(); }
    bool isReal() const { return im_.isZero(); }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const GaussRat& v);

    static GaussRat zero() { return {}; }
    static GaussRat one() { return {Rat(1)}; }
    static GaussRat i() { return {Rat(0), Rat(1)}; }
    static GaussRat fromRat(const Rat& r) { return {r}; }

private:
    Rat re_;
    Rat im_;
};

}  // namespace dfin
