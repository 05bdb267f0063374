#include "dfin/gauss.hpp"

#include <ostream>
#include <stdexcept>

namespace dfin {

GaussRat GaussRat::inv() const {
    Rat n = normSq();
    if (n.isZero()) throw std::domain_error("gaussian rational division by zero");
    return {re_ / n, -im_ / n};
}

GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * b.inv(); }

std::string GaussRat::str() const {
    if (im_.isZero()) return re_.str();
    std::string s;
    if (!re_.isZero()) s += re_.str();
    if (im_.sign() > 0 && !re_.isZero()) s += "+";
    if (im_.isOne())
        s += "i";
    else if (im_ == Rat(-1))
        s += "-i";
    else
        s += im_.str() + "*i";
    return s;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& v) { return os << v.str(); }

}  // namespace dfin
