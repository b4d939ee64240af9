#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "beg/engine.hpp"
#include "beg/exact_matrix.hpp"
#include "beg/group.hpp"
#include "beg/pauli.hpp"
#include "beg/report.hpp"

namespace beg {

enum class BraidVariant { Unscaled, Jones, Lambda1, Lambda2 };

std::string to_string(BraidVariant v);
std::optional<BraidVariant> parse_variant(const std::string& s);

struct BraidRepSpec {
    std::uint32_t k = 1;
    BraidVariant variant = BraidVariant::Unscaled;

    std::uint32_t strands() const {
        return (variant == BraidVariant::Lambda1 || variant == BraidVariant::Lambda2)
                   ? 2 * k + 2
                   : 2 * k + 1;
    }
    std::uint32_t generator_count() const { return strands() - 1; }
};

struct BraidWord {
    std::uint32_t n = 2;                 // strand count
    std::vector<int> letters;            // signed generator indices

    std::string to_string() const;
};

/// Generator images T_i feeding the braid matrices for this variant.
std::vector<PauliString> t_images(const BraidRepSpec& spec);

/// R_i = (I + T_i)/sqrt2, times the phase -exp(-i pi/4) for the Jones variant.
std::vector<ExactMatrix> build_r_matrices(const BraidRepSpec& spec);

/// T_i^2 = -I, far commutation, adjacent anticommutation, anti-Hermiticity.
Report theorem3_hypotheses(const std::vector<PauliString>& t_imgs);

/// Far commutation, braid relations and unitarity, all exact.
Report verify_braid_presentation(const std::vector<ExactMatrix>& mats);

std::vector<CycScalar> apply_word(const BraidRepSpec& spec, const BraidWord& word,
                                  const std::vector<CycScalar>& state);

using Perm = std::vector<std::uint8_t>;

struct ImageRecord {
    FiniteGroupRecord<ExactMatrix> group;
    std::vector<Perm> perms;             // per element of group
    FiniteGroupRecord<ExactMatrix> pure; // normal closure of generator squares
    bool consistent = false;             // each matrix carries a single permutation
};

ImageRecord image_group(const BraidRepSpec& spec, std::size_t cap = kDefaultElementCap);

struct GhzPhase {
    CycScalar phase;
    int a = 0;  // detected relative phase exponent
};

/// Phase c with state = c * (|0..0> + zeta8^a |1..1>)/sqrt2, if one exists.
std::optional<GhzPhase> ghz_test(const std::vector<CycScalar>& state);

/// Shortest word within max_len mapping |0..0> to a GHZ state up to phase.
std::optional<BraidWord> ghz_search(const BraidRepSpec& spec, std::uint32_t max_len);

}  // namespace beg
