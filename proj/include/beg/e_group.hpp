#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "beg/pauli.hpp"
#include "beg/report.hpp"

namespace beg {

enum class CenterType { Z2, Z4, Z2xZ2 };

std::string to_string(CenterType t);

/// Normal-form element (-1)^s e_1^{a_1} ... e_n^{a_n} of the abstract group
/// on n generators with e_i^2 = nu, adjacent anticommutation and distant
/// commutation.  The group has exactly 2^{n+1} such forms.
struct EElement {
    std::uint32_t n = 1;
    int nu = -1;
    std::uint8_t s = 0;   // overall sign (-1)^s
    std::uint32_t a = 0;  // exponent mask of e_1..e_n

    static EElement identity(std::uint32_t n, int nu) { return {n, nu, 0, 0}; }
    static EElement minus_one(std::uint32_t n, int nu) { return {n, nu, 1, 0}; }
    static EElement generator(std::uint32_t n, int nu, std::uint32_t i) {
        return {n, nu, 0, 1u << (i - 1)};
    }

    bool is_identity() const { return s == 0 && a == 0; }

    bool operator==(const EElement&) const = default;

    /// Lexicographic canonical order used to pick coset representatives.
    friend bool canonical_less(const EElement& x, const EElement& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.s < y.s;
    }

    std::size_t hash() const {
        return (static_cast<std::size_t>(a) << 1) ^ s ^ (static_cast<std::size_t>(n) << 40);
    }

    std::string to_string() const;
};

EElement e_mul(const EElement& g, const EElement& h);
EElement e_inverse(const EElement& g);
EElement e_negate(const EElement& g);
int e_order(const EElement& g);
/// +1 if gh = hg, -1 if gh = -hg.
int e_commutator_sign(const EElement& g, const EElement& h);

struct EGroupRecord {
    std::uint32_t n;
    int nu;
    std::uint64_t order;
    std::map<int, std::uint64_t> order_histogram;
    std::vector<EElement> center;
    CenterType center_type;
};

constexpr std::uint32_t kMaxEnumN = 20;
// the mask census never materializes elements, so it can go further
constexpr std::uint32_t kMaxCensusN = 28;

/// Orders-by-count census over all 2^{n+1} normal forms.  Index by element
/// order (1, 2, 4).
std::array<std::uint64_t, 5> order_census_serial(std::uint32_t n, int nu);
std::array<std::uint64_t, 5> order_census_parallel(std::uint32_t n, int nu);

EGroupRecord enumerate_e(std::uint32_t n, int nu);

std::pair<std::vector<EElement>, CenterType> center_of(std::uint32_t n, int nu);

/// Image of an abstract element under generator images img[i-1] = image of e_i.
PauliString e_image(const EElement& g, const std::vector<PauliString>& img);

/// Relation audit for candidate generator images: squares, adjacent
/// anticommutation, distant commutation.
Report verify_e_relations(std::uint32_t n, int nu, const std::vector<PauliString>& img);

/// All abstract elements mapping to the identity string; empty iff faithful.
/// Throws if the images do not satisfy the defining relations.
std::vector<EElement> rep_kernel(std::uint32_t n, int nu, const std::vector<PauliString>& img);

}  // namespace beg

template <>
struct std::hash<beg::EElement> {
    std::size_t operator()(const beg::EElement& g) const { return g.hash(); }
};
