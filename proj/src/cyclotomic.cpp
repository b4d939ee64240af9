#include "beg/cyclotomic.hpp"

#include <cmath>
#include <sstream>

namespace beg {

std::string to_string(const CycInt& v) {
    static const char* basis[4] = {"", "zeta8", "zeta8^2", "zeta8^3"};
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        const std::int64_t c = v.c[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const std::int64_t a = c < 0 ? -c : c;
        if (i == 0) {
            out << a;
        } else {
            if (a != 1) out << a << "*";
            out << basis[i];
        }
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

std::string CycScalar::to_string() const {
    std::string s = beg::to_string(num_);
    if (e_ > 0) {
        s = "(" + s + ") / sqrt2^" + std::to_string(e_);
    }
    return s;
}

std::complex<double> CycScalar::to_complex() const {
    const double z = M_SQRT1_2;  // cos(pi/4) = sin(pi/4)
    std::complex<double> r = static_cast<double>(num_.c[0]);
    r += static_cast<double>(num_.c[1]) * std::complex<double>(z, z);
    r += static_cast<double>(num_.c[2]) * std::complex<double>(0.0, 1.0);
    r += static_cast<double>(num_.c[3]) * std::complex<double>(-z, z);
    return r / std::pow(2.0, 0.5 * e_);
}

}  // namespace beg
