#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "beg/cyclotomic.hpp"

namespace beg {

/// Dense square matrix over CycScalar.  Index b of a 2^k-dimensional space is
/// the bit string b_1..b_k with qubit 1 the most significant bit (leftmost
/// tensor factor).
class ExactMatrix {
  public:
    explicit ExactMatrix(std::size_t dim)
        : dim_(dim), a_(dim * dim, CycScalar::zero()) {
        if (dim == 0) throw std::invalid_argument("matrix dimension must be positive");
    }

    static ExactMatrix identity(std::size_t dim) {
        ExactMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = CycScalar::one();
        return m;
    }

    std::size_t dim() const { return dim_; }
    CycScalar& at(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
    const CycScalar& at(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("matmul dimension mismatch");
        ExactMatrix r(a.dim_);
        for (std::size_t i = 0; i < a.dim_; ++i)
            for (std::size_t k = 0; k < a.dim_; ++k) {
                const CycScalar& v = a.at(i, k);
                if (v.is_zero()) continue;
                for (std::size_t j = 0; j < a.dim_; ++j) r.at(i, j) += v * b.at(k, j);
            }
        return r;
    }

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("add dimension mismatch");
        ExactMatrix r(a.dim_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
        return r;
    }

    ExactMatrix scaled(const CycScalar& c) const {
        ExactMatrix r(dim_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
        return r;
    }

    ExactMatrix dagger() const {
        ExactMatrix r(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) r.at(j, i) = at(i, j).conj();
        return r;
    }

    CycScalar trace() const {
        CycScalar t;
        for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
        return t;
    }

    bool is_unitary() const { return *this * dagger() == identity(dim_); }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

    bool operator==(const ExactMatrix&) const = default;

    std::size_t hash() const {
        std::size_t h = dim_;
        for (const auto& v : a_) h = h * 1000003u + v.hash();
        return h;
    }

  private:
    std::size_t dim_;
    std::vector<CycScalar> a_;
};

/// Kronecker product with a as the left (more significant) factor.
ExactMatrix tensor(const ExactMatrix& a, const ExactMatrix& b);

/// Unit-modulus c with a = c * b, if one exists.  c is read off the first
/// nonzero entry of b and verified entrywise.
std::optional<CycScalar> equal_up_to_phase(const ExactMatrix& a, const ExactMatrix& b);

std::vector<CycScalar> apply(const ExactMatrix& m, const std::vector<CycScalar>& v);

}  // namespace beg

template <>
struct std::hash<beg::ExactMatrix> {
    std::size_t operator()(const beg::ExactMatrix& m) const { return m.hash(); }
};
