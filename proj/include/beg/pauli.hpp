#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "beg/exact_matrix.hpp"
#include "beg/report.hpp"

namespace beg {

/// Phase-tracked k-qubit Pauli operator zeta8^p * X^x Z^z with per-qubit
/// operator order X-then-Z.  Mask bit (k-j) carries qubit j, so qubit 1 is
/// the most significant bit of a basis index, matching the leftmost tensor
/// factor.
struct PauliString {
    std::uint32_t k = 1;
    std::uint8_t p = 0;  // phase exponent mod 8
    std::uint32_t x = 0;
    std::uint32_t z = 0;

    static std::uint32_t qubit_bit(std::uint32_t k, std::uint32_t j) {
        if (j < 1 || j > k) throw std::invalid_argument("qubit index out of range");
        return 1u << (k - j);
    }

    static PauliString identity(std::uint32_t k) { return {k, 0, 0, 0}; }
    static PauliString phase(std::uint32_t k, int p) {
        return {k, static_cast<std::uint8_t>(((p % 8) + 8) % 8), 0, 0};
    }
    static PauliString x_op(std::uint32_t k, std::uint32_t j) { return {k, 0, qubit_bit(k, j), 0}; }
    static PauliString z_op(std::uint32_t k, std::uint32_t j) { return {k, 0, 0, qubit_bit(k, j)}; }
    /// Y = ZX = -XZ, stored with phase exponent 4.
    static PauliString y_op(std::uint32_t k, std::uint32_t j) {
        return {k, 4, qubit_bit(k, j), qubit_bit(k, j)};
    }

    bool is_identity() const { return p == 0 && x == 0 && z == 0; }

    bool operator==(const PauliString&) const = default;

    std::size_t hash() const {
        std::size_t h = k;
        h = h * 1000003u + p;
        h = h * 1000003u + x;
        h = h * 1000003u + z;
        return h;
    }

    std::string to_string() const;
};

/// Product; moving h's X factors left past g's Z factors costs a sign.
PauliString ps_mul(const PauliString& g, const PauliString& h);
PauliString ps_inverse(const PauliString& g);
PauliString ps_negate(const PauliString& g);
int ps_order(const PauliString& g);
/// +1 if gh = hg, -1 if gh = -hg.
int ps_commutator_sign(const PauliString& g, const PauliString& h);
ExactMatrix to_matrix(const PauliString& g);

/// Images T_1..T_2k of the e-generators under the representation built from
/// iZ-chains and Y's; the first image is iZ_1 (no zeroth factor exists).
std::vector<PauliString> generators_rho(std::uint32_t k);
/// generators_rho extended by +iZ_k (branch 1) or -iZ_k (branch 2).
std::vector<PauliString> generators_lambda(std::uint32_t k, int branch);
/// X_1..X_k, Z_1..Z_k; with_phase appends the central order-4 phase i.
std::vector<PauliString> generators_pauli(std::uint32_t k, bool with_phase);
/// Multiply every generator by the phase i; squares flip sign.
std::vector<PauliString> rescale_by_i(const std::vector<PauliString>& gens);

/// Verifies the generator translation Y_i = img(e_2i),
/// Z_i = (-i)^i img(e_1) img(e_3) ... img(e_2i-1), X_i = Z_i Y_i.
Report pauli_from_e(std::uint32_t k);

}  // namespace beg

template <>
struct std::hash<beg::PauliString> {
    std::size_t operator()(const beg::PauliString& g) const { return g.hash(); }
};
