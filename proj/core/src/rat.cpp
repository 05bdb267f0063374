#include "dfin/rat.hpp"

#include <ostream>
#include <stdexcept>

namespace dfin {

Rat::Rat(long n, long d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, n, 1);
    mpq_t den;
    mpq_init(den);
    mpq_set_si(den, d, 1);
    mpq_div(q_, q_, den);
    mpq_clear(den);
}

Rat::Rat(const Int& n, const Int& d) {
    if (d.isZero()) throw std::domain_error("rational with zero denominator");
    mpq_init(q_);
    mpz_set(mpq_numref(q_), n.raw());
    mpz_set(mpq_denref(q_), d.raw());
    mpq_canonicalize(q_);
}

Rat::Rat(std::string_view text) {
    std::string s(text);
    mpq_init(q_);
    if (mpq_set_str(q_, s.c_str(), 10) != 0) {
        mpq_clear(q_);
        throw std::invalid_argument("invalid rational literal: " + s);
    }
    if (mpz_sgn(mpq_denref(q_)) == 0) {
        mpq_clear(q_);
        throw std::domain_error("rational with zero denominator");
    }
    mpq_canonicalize(q_);
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.isZero()) throw std::domain_error("rational division by zero");
    Rat r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
}

Rat Rat::inv() const {
    if (isZero()) throw std::domain_error("rational division by zero");
    Rat r;
    mpq_inv(r.q_, q_);
    return r;
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    const Rat base = e > 0 ? *this : inv();
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    Rat r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), k);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), k);
    return r;
}

std::string Rat::str() const {
    if (isInteger()) return num().str();
    return num().str() + "/" + den().str();
}

std::ostream& operator<<(std::ostream& os, const Rat& v) { return os << v.str(); }

}  // namespace dfin
