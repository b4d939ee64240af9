#include "beg/engine.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace beg {

std::string GroupInvariants::to_string() const {
    std::ostringstream out;
    out << "order=" << order << " center=" << beg::to_string(center_type)
        << " order4=" << order4_count;
    return out.str();
}

std::string CentralProductLabel::text() const {
    std::string s_factors;
    if (has_q) {
        s_factors = "Q";
        if (s >= 2) s_factors += s == 2 ? "D" : "D^" + std::to_string(s - 1);
    } else if (s >= 1) {
        s_factors = s == 1 ? "D" : "D^" + std::to_string(s);
    }
    std::string prefix;
    if (z_prefix == 2) prefix = "Z2";
    if (z_prefix == 4) prefix = "Z4";
    if (prefix.empty()) return s_factors.empty() ? "1" : s_factors;
    return s_factors.empty() ? prefix : prefix + "o" + s_factors;
}

GroupInvariants CentralProductLabel::predicted() const {
    const std::uint64_t pow4 = std::uint64_t{1} << (2 * s);
    const std::uint64_t pow2 = std::uint64_t{1} << s;
    const std::uint64_t base_order = 2 * pow4;
    const std::uint64_t base_count4 = has_q ? pow4 + pow2 : pow4 - pow2;
    switch (z_prefix) {
        case 0: return {base_order, CenterType::Z2, base_count4};
        case 2: return {2 * base_order, CenterType::Z2xZ2, 2 * base_count4};
        case 4: return {2 * base_order, CenterType::Z4, base_order};
    }
    throw std::logic_error("bad z_prefix");
}

std::string to_string(Category c) {
    switch (c) {
        case Category::Extraspecial: return "extraspecial";
        case Category::Almost: return "almost";
        case Category::Nearly: return "nearly";
    }
    return "?";
}

CentralProductLabel predicted_label(std::uint32_t n, int nu) {
    if (nu == 1) {
        if (n % 2 == 0) return {0, false, n / 2};
        return {2, false, n / 2};
    }
    switch (n % 8) {
        case 0: return {0, false, n / 2};
        case 1: return {4, false, n / 2};
        case 2: return {0, true, n / 2};
        case 3: return {2, true, n / 2};
        case 4: return {0, true, n / 2};
        case 5: return {4, true, n / 2};
        case 6: return {0, false, n / 2};
        case 7: return {2, false, n / 2};
    }
    throw std::logic_error("unreachable");
}

GroupInvariants invariants_of(const EGroupRecord& rec) {
    auto it = rec.order_histogram.find(4);
    return {rec.order, rec.center_type,
            it == rec.order_histogram.end() ? 0 : it->second};
}

GroupInvariants invariants_of(const FiniteGroupRecord<PauliString>& rec) {
    CenterType type;
    if (rec.center.size() == 2) {
        type = CenterType::Z2;
    } else if (rec.center.size() == 4) {
        bool has4 = false;
        for (auto i : rec.center) has4 = has4 || ps_order(rec.elements[i]) == 4;
        type = has4 ? CenterType::Z4 : CenterType::Z2xZ2;
    } else {
        throw std::domain_error("center is not of order 2 or 4");
    }
    return {rec.order(), type, rec.count_of_order(4)};
}

ClassificationRecord classify_e(std::uint32_t n, int nu) {
    ClassificationRecord rec;
    rec.n = n;
    rec.nu = nu;
    rec.label = predicted_label(n, nu);
    rec.category = rec.label.z_prefix == 0   ? Category::Extraspecial
                   : rec.label.z_prefix == 4 ? Category::Almost
                                             : Category::Nearly;
    rec.predicted = rec.label.predicted();
    rec.enumerated = invariants_of(enumerate_e(n, nu));
    rec.report.case_name =
        "classify n=" + std::to_string(n) + " nu=" + std::to_string(nu);
    rec.report.add("order", "group order matches the label " + rec.label.text(),
                   rec.predicted.order == rec.enumerated.order, rec.enumerated.to_string());
    rec.report.add("center", "center type matches the label",
                   rec.predicted.center_type == rec.enumerated.center_type,
                   to_string(rec.enumerated.center_type));
    rec.report.add("order4", "order-4 element count matches the label",
                   rec.predicted.order4_count == rec.enumerated.order4_count,
                   std::to_string(rec.enumerated.order4_count));
    return rec;
}

std::pair<std::uint64_t, std::uint64_t> order4_formula(std::uint32_t s) {
    if (s < 1) throw std::invalid_argument("s must be >= 1");
    const std::int64_t pow4 = std::int64_t{1} << (2 * s);
    const std::int64_t alt = (s % 2 == 0) ? (std::int64_t{1} << s) : -(std::int64_t{1} << s);
    return {static_cast<std::uint64_t>((pow4 + alt) / 2),
            static_cast<std::uint64_t>((pow4 - alt) / 2)};
}

namespace {

FiniteGroupRecord<EElement> e_closure(std::uint32_t n, int nu, const std::vector<EElement>& gens) {
    return close_group(EElement::identity(n, nu), gens,
                       [](const EElement& a, const EElement& b) { return e_mul(a, b); });
}

}  // namespace

Report verify_central_product(std::uint32_t n, int nu, const std::vector<EElement>& h_gens,
                              const std::vector<EElement>& k_gens) {
    Report rep;
    rep.case_name = "central product n=" + std::to_string(n) + " nu=" + std::to_string(nu);
    const auto h = e_closure(n, nu, h_gens);
    const auto k = e_closure(n, nu, k_gens);

    bool commute = true;
    for (const auto& a : h.elements)
        for (const auto& b : k.elements) commute = commute && e_mul(a, b) == e_mul(b, a);
    rep.add("commute", "the two subgroups commute elementwise", commute);

    const auto [center, center_type] = center_of(n, nu);
    (void)center_type;
    std::unordered_set<EElement> h_set(h.elements.begin(), h.elements.end());
    std::unordered_set<EElement> central(center.begin(), center.end());
    std::size_t inter = 0;
    bool inter_central = true;
    for (const auto& b : k.elements)
        if (h_set.count(b)) {
            ++inter;
            inter_central = inter_central && central.count(b) > 0;
        }
    rep.add("central_intersection", "the subgroup intersection lies in the center",
            inter_central, "intersection order " + std::to_string(inter));

    const std::uint64_t g_order = std::uint64_t{1} << (n + 1);
    const bool count_ok = inter > 0 && h.order() * k.order() / inter == g_order;
    std::unordered_set<EElement> products;
    for (const auto& a : h.elements)
        for (const auto& b : k.elements) products.insert(e_mul(a, b));
    rep.add("coverage", "products of the two subgroups cover the whole group",
            count_ok && products.size() == g_order,
            "|H|=" + std::to_string(h.order()) + " |K|=" + std::to_string(k.order()) +
                " |HK|=" + std::to_string(products.size()));
    return rep;
}

Decomposition decompose_e(std::uint32_t n, int nu) {
    if (n < 2) throw std::invalid_argument("decomposition needs n >= 2");
    Decomposition dec;
    dec.n = n;
    dec.nu = nu;
    dec.all_steps_pass = true;

    std::uint32_t m = n;
    while (m > 2) {
        DecompositionStep step;
        step.level = m;
        if (m % 2 == 1) {
            // central factor <e_1 e_3 ... e_m>
            std::uint32_t w_mask = 0;
            for (std::uint32_t i = 1; i <= m; i += 2) w_mask |= 1u << (i - 1);
            const EElement w{m, nu, 0, w_mask};
            step.factor = e_order(w) == 4 ? "Z4" : "Z2";
            std::vector<EElement> h_gens;
            for (std::uint32_t i = 1; i < m; ++i) h_gens.push_back(EElement::generator(m, nu, i));
            step.check = verify_central_product(m, nu, h_gens, {w});
            m -= 1;
        } else {
            // dihedral/quaternion factor <e_1 e_3 ... e_m-1, e_m>
            std::uint32_t w_mask = 0;
            for (std::uint32_t i = 1; i <= m - 1; i += 2) w_mask |= 1u << (i - 1);
            const EElement w{m, nu, 0, w_mask};
            step.factor = e_mul(w, w).s ? "Q" : "D";
            std::vector<EElement> h_gens;
            for (std::uint32_t i = 1; i <= m - 2; ++i) h_gens.push_back(EElement::generator(m, nu, i));
            step.check = verify_central_product(m, nu, h_gens, {w, EElement::generator(m, nu, m)});
            m -= 2;
        }
        dec.all_steps_pass = dec.all_steps_pass && step.check.all_pass();
        dec.steps.push_back(std::move(step));
    }
    // two-generator base
    dec.word.push_back(nu == -1 ? "Q" : "D");
    for (auto it = dec.steps.rbegin(); it != dec.steps.rend(); ++it) dec.word.push_back(it->factor);

    std::uint32_t q = 0, d = 0;
    int prefix = 0;
    for (const auto& f : dec.word) {
        if (f == "Q") ++q;
        if (f == "D") ++d;
        if (f == "Z2") prefix = 2;
        if (f == "Z4") prefix = 4;
    }
    dec.normalized = {prefix, q % 2 == 1, q + d};
    dec.matches_prediction = dec.normalized.text() == predicted_label(n, nu).text();
    return dec;
}

std::string recognize_dq(const FiniteGroupRecord<PauliString>& rec) {
    const std::uint64_t c4 = rec.count_of_order(4);
    switch (rec.order()) {
        case 8:
            if (c4 == 2) return "D";
            if (c4 == 6) return "Q";
            return "other";
        case 4: return c4 > 0 ? "Z4" : "Z2xZ2";
        case 2: return "Z2";
        case 1: return "trivial";
        default: return "other";
    }
}

FiniteGroupRecord<PauliString> pauli_closure(const std::vector<PauliString>& gens,
                                             std::size_t cap) {
    if (gens.empty()) throw std::invalid_argument("pauli closure needs a width from a generator");
    return close_group(PauliString::identity(gens[0].k), gens,
                       [](const PauliString& a, const PauliString& b) { return ps_mul(a, b); },
                       cap);
}

std::vector<EElement> index_group_representatives(std::uint32_t n, int nu) {
    const auto [center, type] = center_of(n, nu);
    (void)type;
    std::unordered_set<EElement> seen;
    std::vector<EElement> reps;
    for (std::uint32_t a = 0; a < (1u << n); ++a)
        for (std::uint8_t s = 0; s <= 1; ++s) {
            const EElement g{n, nu, s, a};
            if (seen.count(g)) continue;
            EElement rep = g;
            for (const auto& z : center) {
                const EElement gz = e_mul(g, z);
                seen.insert(gz);
                if (canonical_less(gz, rep)) rep = gz;
            }
            reps.push_back(rep);
        }
    std::sort(reps.begin(), reps.end(),
              [](const EElement& x, const EElement& y) { return canonical_less(x, y); });
    return reps;
}

std::vector<ExactMatrix> nice_basis_matrices(std::uint32_t n, int nu,
                                             const std::vector<PauliString>& img) {
    std::vector<ExactMatrix> out;
    for (const auto& g : index_group_representatives(n, nu)) out.push_back(to_matrix(e_image(g, img)));
    return out;
}

Report nice_error_basis_check(std::uint32_t n, int nu, const std::vector<PauliString>& img) {
    Report rep;
    rep.case_name = "nice basis n=" + std::to_string(n) + " nu=" + std::to_string(nu);
    rep.merge(verify_e_relations(n, nu, img));
    if (!rep.all_pass()) return rep;

    const std::uint32_t k = img[0].k;
    const std::size_t d = std::size_t{1} << k;
    const auto [center, type] = center_of(n, nu);
    (void)type;
    const std::uint64_t index_order = (std::uint64_t{1} << (n + 1)) / center.size();
    rep.add("degree", "the degree squared equals the index group order",
            static_cast<std::uint64_t>(d) * d == index_order,
            "d=" + std::to_string(d) + " |G/Z|=" + std::to_string(index_order));

    const auto reps = index_group_representatives(n, nu);
    std::unordered_map<EElement, EElement> coset_rep;
    for (const auto& r : reps)
        for (const auto& z : center) coset_rep.emplace(e_mul(r, z), r);
    std::unordered_map<EElement, std::size_t> rep_index;
    for (std::size_t i = 0; i < reps.size(); ++i) rep_index.emplace(reps[i], i);

    std::vector<ExactMatrix> phi;
    phi.reserve(reps.size());
    for (const auto& g : reps) phi.push_back(to_matrix(e_image(g, img)));

    rep.add("identity", "the identity coset maps to the identity matrix",
            reps[0].is_identity() && phi[0] == ExactMatrix::identity(d));

    bool traceless = true;
    for (std::size_t i = 1; i < reps.size(); ++i)
        traceless = traceless && phi[i].trace().is_zero();
    rep.add("traceless", "every non-identity representative is traceless", traceless);

    bool projective = true;
    bool omega_units = true;
    std::unordered_set<CycScalar> omegas;
    for (std::size_t i = 0; i < reps.size() && projective; ++i)
        for (std::size_t j = 0; j < reps.size(); ++j) {
            const ExactMatrix prod = phi[i] * phi[j];
            const EElement target = coset_rep.at(e_mul(reps[i], reps[j]));
            const auto omega = equal_up_to_phase(prod, phi[rep_index.at(target)]);
            if (!omega) {
                projective = false;
                break;
            }
            omegas.insert(*omega);
            const CycScalar w2 = *omega * *omega;
            omega_units = omega_units && (w2 * w2).is_one();
        }
    rep.add("projective", "products close onto the basis up to a phase", projective,
            std::to_string(omegas.size()) + " distinct phases");
    rep.add("omega_cyclic", "collected phases lie in the cyclic group {1,-1,i,-i}",
            projective && omega_units);

    bool orthogonal = true;
    for (std::size_t i = 0; i < reps.size() && orthogonal; ++i)
        for (std::size_t j = 0; j < reps.size(); ++j) {
            if (i == j) continue;
            CycScalar t;
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c) t += phi[i].at(r, c).conj() * phi[j].at(r, c);
            if (!t.is_zero()) {
                orthogonal = false;
                break;
            }
        }
    rep.add("trace_orthogonal", "distinct representatives are trace orthogonal", orthogonal);
    return rep;
}

Report basis_equiv_mod_phase(const std::vector<ExactMatrix>& rep_basis,
                             const std::vector<ExactMatrix>& pauli_basis) {
    Report rep;
    rep.case_name = "basis equivalence mod phase";
    if (rep_basis.size() != pauli_basis.size()) {
        rep.add("size", "bases have equal size", false);
        return rep;
    }
    std::vector<bool> used(pauli_basis.size(), false);
    std::ostringstream table;
    bool ok = true;
    for (std::size_t i = 0; i < rep_basis.size(); ++i) {
        bool matched = false;
        for (std::size_t j = 0; j < pauli_basis.size(); ++j) {
            if (used[j]) continue;
            if (auto c = equal_up_to_phase(rep_basis[i], pauli_basis[j])) {
                used[j] = true;
                matched = true;
                table << i << "->" << j << " phase " << c->to_string() << "; ";
                break;
            }
        }
        ok = ok && matched;
        if (!matched) break;
    }
    rep.add("bijection", "every basis element matches a Pauli element up to a unit phase", ok,
            table.str());
    return rep;
}

namespace {

void add_invariant_claim(Report& rep, const std::string& id, const std::string& statement,
                         bool expect_equal, const GroupInvariants& a, const GroupInvariants& b) {
    const bool equal = a == b;
    rep.add(id, statement, equal == expect_equal,
            "[" + a.to_string() + "] vs [" + b.to_string() + "]");
}

}  // namespace

Report compare_pauli(std::uint32_t k) {
    Report rep;
    rep.case_name = "compare k=" + std::to_string(k);

    rep.add("translation", "the Pauli generators arise from the abstract generators",
            pauli_from_e(k).all_pass());

    const auto p_real = invariants_of(pauli_closure(generators_pauli(k, false)));
    const auto p_cplx = invariants_of(pauli_closure(generators_pauli(k, true)));
    const auto e1_even = invariants_of(enumerate_e(2 * k, 1));
    const auto em1_even = invariants_of(enumerate_e(2 * k, -1));
    const auto e1_odd = invariants_of(enumerate_e(2 * k + 1, 1));
    const auto em1_odd = invariants_of(enumerate_e(2 * k + 1, -1));

    add_invariant_claim(rep, "real_pauli_iso", "the real Pauli group matches E(+1) at 2k",
                        true, p_real, e1_even);
    add_invariant_claim(rep, "complex_pauli_noniso",
                        "the complex Pauli group differs from E(+1) at 2k+1 (Z4 vs Z2xZ2 center)",
                        false, p_cplx, e1_odd);

    const bool even_iso_expected = (k % 4 == 0) || (k % 4 == 3);
    add_invariant_claim(rep, "even_vs_real",
                        even_iso_expected
                            ? "E(-1) at 2k matches the real Pauli group"
                            : "E(-1) at 2k contains a quaternion factor and differs from the "
                              "real Pauli group",
                        even_iso_expected, em1_even, p_real);

    if (k % 4 == 0)
        add_invariant_claim(rep, "odd_vs_complex", "E(-1) at 2k+1 matches the complex Pauli group",
                            true, em1_odd, p_cplx);
    if (k % 4 == 3)
        add_invariant_claim(rep, "odd_nu_agree", "E(-1) and E(+1) agree at 2k+1",
                            true, em1_odd, e1_odd);
    return rep;
}

Report table1_report() {
    Report rep;
    rep.case_name = "comparison table";
    for (std::uint32_t k = 1; k <= 4; ++k) {
        const std::string suffix = " k=" + std::to_string(k);
        const CentralProductLabel real_label{0, false, k};
        const CentralProductLabel cplx_label{4, false, k};
        rep.add("P" + std::to_string(k), "real Pauli group is " + real_label.text() + suffix,
                invariants_of(pauli_closure(generators_pauli(k, false))) == real_label.predicted());
        rep.add("P'" + std::to_string(k), "complex Pauli group is " + cplx_label.text() + suffix,
                invariants_of(pauli_closure(generators_pauli(k, true))) == cplx_label.predicted());
        for (int nu : {1, -1}) {
            for (std::uint32_t n : {2 * k, 2 * k + 1}) {
                const auto label = predicted_label(n, nu);
                rep.add("E(" + std::to_string(nu) + ")_" + std::to_string(n),
                        "enumerated invariants match " + label.text() + suffix,
                        invariants_of(enumerate_e(n, nu)) == label.predicted());
            }
        }
    }
    // D^2 = Q^2 by invariant equality of generator closures
    std::vector<PauliString> d2 = generators_pauli(2, false);
    std::vector<PauliString> q2;
    for (std::uint32_t j = 1; j <= 2; ++j) {
        q2.push_back(ps_mul(PauliString::phase(2, 2), PauliString::x_op(2, j)));
        q2.push_back(ps_mul(PauliString::phase(2, 2), PauliString::z_op(2, j)));
    }
    rep.add("D2_Q2", "the double dihedral and double quaternion products agree",
            invariants_of(pauli_closure(d2)) == invariants_of(pauli_closure(q2)));
    return rep;
}

}  // namespace beg
