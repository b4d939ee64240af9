#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace beg {

[[noreturn]] inline void overflow_fail() {
    throw std::overflow_error("cyclotomic coefficient overflow");
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) overflow_fail();
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) overflow_fail();
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) overflow_fail();
    return r;
}

/// Element of Z[zeta8], zeta8 = exp(i*pi/4).  Coefficients of
/// 1, zeta8, zeta8^2, zeta8^3; reduction by zeta8^4 = -1 makes the
/// four-coefficient representation unique.
struct CycInt {
    std::array<std::int64_t, 4> c{0, 0, 0, 0};

    constexpr CycInt() = default;
    constexpr CycInt(std::int64_t c0, std::int64_t c1, std::int64_t c2, std::int64_t c3)
        : c{c0, c1, c2, c3} {}

    static constexpr CycInt zero() { return {}; }
    static constexpr CycInt one() { return {1, 0, 0, 0}; }
    static constexpr CycInt imag() { return {0, 0, 1, 0}; }
    /// sqrt2 = zeta8 - zeta8^3.
    static constexpr CycInt sqrt2() { return {0, 1, 0, -1}; }

    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }

    friend CycInt operator+(const CycInt& a, const CycInt& b) {
        return {checked_add(a.c[0], b.c[0]), checked_add(a.c[1], b.c[1]),
                checked_add(a.c[2], b.c[2]), checked_add(a.c[3], b.c[3])};
    }
    friend CycInt operator-(const CycInt& a, const CycInt& b) {
        return {checked_sub(a.c[0], b.c[0]), checked_sub(a.c[1], b.c[1]),
                checked_sub(a.c[2], b.c[2]), checked_sub(a.c[3], b.c[3])};
    }
    CycInt operator-() const {
        return {checked_sub(0, c[0]), checked_sub(0, c[1]),
                checked_sub(0, c[2]), checked_sub(0, c[3])};
    }
    friend CycInt operator*(const CycInt& a, const CycInt& b) {
        CycInt r;
        for (int i = 0; i < 4; ++i) {
            if (a.c[i] == 0) continue;
            for (int j = 0; j < 4; ++j) {
                if (b.c[j] == 0) continue;
                const std::int64_t v = checked_mul(a.c[i], b.c[j]);
                const int k = i + j;
                if (k < 4)
                    r.c[k] = checked_add(r.c[k], v);
                else
                    r.c[k - 4] = checked_sub(r.c[k - 4], v);
            }
        }
        return r;
    }

    /// Complex conjugation, zeta8 -> zeta8^-1 = -zeta8^3.
    CycInt conj() const { return {c[0], -c[3], -c[2], -c[1]}; }

    /// Galois map zeta8 -> zeta8^3; sends sqrt2 to -sqrt2 on the real subfield.
    CycInt sqrt2_conj() const { return {c[0], c[3], -c[2], c[1]}; }

    bool all_even() const {
        return (c[0] % 2 == 0) && (c[1] % 2 == 0) && (c[2] % 2 == 0) && (c[3] % 2 == 0);
    }
    CycInt half() const { return {c[0] / 2, c[1] / 2, c[2] / 2, c[3] / 2}; }

    std::optional<CycInt> divide_exact(std::int64_t d) const {
        if (d == 0) return std::nullopt;
        CycInt r;
        for (int i = 0; i < 4; ++i) {
            if (c[i] % d != 0) return std::nullopt;
            r.c[i] = c[i] / d;
        }
        return r;
    }

    bool operator==(const CycInt&) const = default;
};

/// Exact scalar num / sqrt2^e in Z[zeta8, 1/sqrt2].  Canonical form: either
/// num = 0 and e = 0, or e = 0, or num is not divisible by sqrt2; equality is
/// then structural.
class CycScalar {
  public:
    CycScalar() = default;
    explicit CycScalar(CycInt num, std::uint32_t e = 0) : num_(num), e_(e) { canonicalize(); }

    static CycScalar zero() { return {}; }
    static CycScalar one() { return CycScalar(CycInt::one()); }
    static CycScalar imag() { return CycScalar(CycInt::imag()); }
    static CycScalar from_int(std::int64_t v) { return CycScalar(CycInt{v, 0, 0, 0}); }
    static CycScalar sqrt2() { return CycScalar(CycInt::sqrt2()); }
    static CycScalar inv_sqrt2() { return CycScalar(CycInt::one(), 1); }

    /// zeta8^p for any integer p.
    static CycScalar zeta8_pow(std::int64_t p) {
        std::int64_t m = ((p % 8) + 8) % 8;
        CycInt n;
        if (m < 4)
            n.c[static_cast<std::size_t>(m)] = 1;
        else
            n.c[static_cast<std::size_t>(m - 4)] = -1;
        return CycScalar(n);
    }

    const CycInt& num() const { return num_; }
    std::uint32_t e() const { return e_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == CycInt::one() && e_ == 0; }

    friend CycScalar operator+(const CycScalar& a, const CycScalar& b) {
        CycInt an = a.num_, bn = b.num_;
        std::uint32_t e = std::max(a.e_, b.e_);
        for (std::uint32_t i = a.e_; i < e; ++i) an = an * CycInt::sqrt2();
        for (std::uint32_t i = b.e_; i < e; ++i) bn = bn * CycInt::sqrt2();
        return CycScalar(an + bn, e);
    }
    friend CycScalar operator-(const CycScalar& a, const CycScalar& b) { return a + (-b); }
    CycScalar operator-() const {
        CycScalar r;
        r.num_ = -num_;
        r.e_ = e_;
        return r;
    }
    friend CycScalar operator*(const CycScalar& a, const CycScalar& b) {
        return CycScalar(a.num_ * b.num_, a.e_ + b.e_);
    }
    CycScalar& operator+=(const CycScalar& o) { return *this = *this + o; }
    CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }

    CycScalar conj() const {
        CycScalar r;
        r.num_ = num_.conj();
        r.e_ = e_;
        return r;  // sqrt2 is real and conj preserves divisibility by it
    }

    bool is_unit_modulus() const { return (*this * conj()).is_one(); }

    /// Exact division; empty when the quotient leaves the ring.
    std::optional<CycScalar> divide_exact(const CycScalar& d) const {
        if (d.is_zero()) return std::nullopt;
        // d * conj(d) is real; multiplying by its sqrt2-conjugate gives a
        // plain integer, so the quotient reduces to an integer division.
        const CycInt dd = d.num_ * d.num_.conj();
        const CycInt norm = dd * dd.sqrt2_conj();
        if (norm.c[1] != 0 || norm.c[2] != 0 || norm.c[3] != 0) return std::nullopt;
        std::int64_t n = norm.c[0];
        if (n == 0) return std::nullopt;
        CycInt p = num_ * d.num_.conj() * dd.sqrt2_conj();
        for (std::uint32_t i = 0; i < d.e_; ++i) p = p * CycInt::sqrt2();
        bool neg = n < 0;
        if (neg) n = -n;
        std::uint32_t twos = 0;
        while (n % 2 == 0) {
            n /= 2;
            ++twos;
        }
        auto q = (neg ? -p : p).divide_exact(n);
        if (!q) return std::nullopt;
        CycScalar r(*q, e_ + 2 * twos);
        return r;
    }

    bool operator==(const CycScalar&) const = default;

    std::size_t hash() const {
        std::size_t h = std::hash<std::uint32_t>{}(e_);
        for (auto v : num_.c) h = h * 1000003u + std::hash<std::int64_t>{}(static_cast<std::uint64_t>(v));
        return h;
    }

    std::string to_string() const;

    std::complex<double> to_complex() const;

  private:
    void canonicalize() {
        if (num_.is_zero()) {
            e_ = 0;
            return;
        }
        while (e_ > 0) {
            const CycInt t = num_ * CycInt::sqrt2();
            if (!t.all_even()) break;
            num_ = t.half();
            --e_;
        }
    }

    CycInt num_{};
    std::uint32_t e_ = 0;
};

std::string to_string(const CycInt& v);

}  // namespace beg

template <>
struct std::hash<beg::CycScalar> {
    std::size_t operator()(const beg::CycScalar& s) const { return s.hash(); }
};
