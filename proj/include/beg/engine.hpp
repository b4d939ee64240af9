#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "beg/e_group.hpp"
#include "beg/group.hpp"
#include "beg/pauli.hpp"
#include "beg/report.hpp"

namespace beg {

/// Invariant triple separating every group pair compared here: D^r vs
/// QD^{r-1} differ in order-4 counts, the three center types separate the
/// odd cases.
struct GroupInvariants {
    std::uint64_t order = 0;
    CenterType center_type = CenterType::Z2;
    std::uint64_t order4_count = 0;

    bool operator==(const GroupInvariants&) const = default;
    std::string to_string() const;
};

/// Central-product word: optional Z2/Z4 prefix, then s dihedral/quaternion
/// factors normalized (via D^2 = Q^2) to at most one leading Q.
struct CentralProductLabel {
    int z_prefix = 0;  // 0 none, 2 = Z2 factor, 4 = Z4 factor
    bool has_q = false;
    std::uint32_t s = 0;  // number of D/Q factors

    std::string text() const;
    GroupInvariants predicted() const;
};

enum class Category { Extraspecial, Almost, Nearly };
std::string to_string(Category c);

/// The classification's predicted label for (n, nu), by n mod 8 at nu = -1
/// and by parity at nu = +1.
CentralProductLabel predicted_label(std::uint32_t n, int nu);

struct ClassificationRecord {
    std::uint32_t n;
    int nu;
    CentralProductLabel label;
    Category category;
    GroupInvariants predicted;
    GroupInvariants enumerated;
    Report report;
};

ClassificationRecord classify_e(std::uint32_t n, int nu);

/// Cyclic order-4 subgroup counts for DQ^{s-1} and Q^s.
std::pair<std::uint64_t, std::uint64_t> order4_formula(std::uint32_t s);

/// Checks that <H_gens> and <K_gens> form the whole group as a central
/// product: elementwise commutation, central intersection, coverage.
Report verify_central_product(std::uint32_t n, int nu, const std::vector<EElement>& h_gens,
                              const std::vector<EElement>& k_gens);

struct DecompositionStep {
    std::uint32_t level;   // generator count before peeling
    std::string factor;    // D, Q, Z2 or Z4
    Report check;
};

struct Decomposition {
    std::uint32_t n;
    int nu;
    std::vector<DecompositionStep> steps;
    std::vector<std::string> word;  // factors in peel order, base included
    CentralProductLabel normalized;
    bool matches_prediction = false;
    bool all_steps_pass = false;
};

/// Peels <e_1 e_3 ... e_2j-1, e_2j> factors down to the two-generator base,
/// plus the central Z2/Z4 factor for odd n, validating every step.
Decomposition decompose_e(std::uint32_t n, int nu);

GroupInvariants invariants_of(const EGroupRecord& rec);
GroupInvariants invariants_of(const FiniteGroupRecord<PauliString>& rec);

/// Identifies a small group by its invariants.
std::string recognize_dq(const FiniteGroupRecord<PauliString>& rec);

FiniteGroupRecord<PauliString> pauli_closure(const std::vector<PauliString>& gens,
                                             std::size_t cap = kDefaultElementCap);

/// Coset representatives of the center, lexicographically smallest canonical
/// form per coset, in deterministic order.
std::vector<EElement> index_group_representatives(std::uint32_t n, int nu);

/// Nice-error-basis audit of the representation given by generator images:
/// identity, tracelessness, projective closure with cyclic phases, trace
/// orthogonality, degree.
Report nice_error_basis_check(std::uint32_t n, int nu, const std::vector<PauliString>& img);

/// The basis matrices over center-coset representatives.
std::vector<ExactMatrix> nice_basis_matrices(std::uint32_t n, int nu,
                                             const std::vector<PauliString>& img);

/// Bijection between two bases via unit-modulus phases; the witness carries
/// the phase table.
Report basis_equiv_mod_phase(const std::vector<ExactMatrix>& rep_basis,
                             const std::vector<ExactMatrix>& pauli_basis);

/// Invariant comparison of the real/complex Pauli groups with the abstract
/// groups at 2k and 2k+1 generators, both nu.
Report compare_pauli(std::uint32_t k);

/// The 24-cell comparison table for k = 1..4 plus the D^2 = Q^2 identity.
Report table1_report();

}  // namespace beg
