#include "dfin/int.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

namespace dfin {

Int::Int(std::string_view dec) {
    std::string s(dec);
    if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
        mpz_clear(z_);
        throw std::invalid_argument("invalid integer literal: " + s);
    }
}

std::string Int::str() const {
    std::vector<char> buf(mpz_sizeinbase(z_, 10) + 2);
    mpz_get_str(buf.data(), 10, z_);
    return std::string(buf.data());
}

std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.str(); }

}  // namespace dfin
