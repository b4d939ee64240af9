#include "beg/e_group.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace beg {

namespace {
void check_args(std::uint32_t n, int nu, std::uint32_t max_n = kMaxEnumN) {
    if (n < 1 || n > max_n) throw std::invalid_argument("generator count out of range");
    if (nu != 1 && nu != -1) throw std::invalid_argument("nu must be +1 or -1");
}
}  // namespace

std::string to_string(CenterType t) {
    switch (t) {
        case CenterType::Z2: return "Z2";
        case CenterType::Z4: return "Z4";
        case CenterType::Z2xZ2: return "Z2xZ2";
    }
    return "?";
}

std::string EElement::to_string() const {
    std::ostringstream out;
    if (s) out << "-";
    if (a == 0) {
        out << "1";
    } else {
        bool first = true;
        for (std::uint32_t i = 1; i <= n; ++i) {
            if (a & (1u << (i - 1))) {
                if (!first) out << " ";
                out << "e" << i;
                first = false;
            }
        }
    }
    return out.str();
}

EElement e_mul(const EElement& g, const EElement& h) {
    if (g.n != h.n || g.nu != h.nu) throw std::invalid_argument("e-group parameter mismatch");
    // Merging h's word into g's costs a sign per adjacent pair (j = i+1 with
    // e_j in g, e_i in h), then a factor nu per repeated index.
    int t = std::popcount(g.a & (h.a << 1));
    if (g.nu == -1) t += std::popcount(g.a & h.a);
    EElement r;
    r.n = g.n;
    r.nu = g.nu;
    r.s = static_cast<std::uint8_t>((g.s ^ h.s ^ t) & 1);
    r.a = g.a ^ h.a;
    return r;
}

EElement e_negate(const EElement& g) {
    EElement r = g;
    r.s ^= 1;
    return r;
}

EElement e_inverse(const EElement& g) {
    // Every square is central (+-1), so the inverse is g or -g.
    return e_mul(g, g).s ? e_negate(g) : g;
}

int e_order(const EElement& g) {
    if (g.a == 0) return g.s ? 2 : 1;
    return e_mul(g, g).s ? 4 : 2;
}

int e_commutator_sign(const EElement& g, const EElement& h) {
    const int t = std::popcount(g.a & (h.a << 1)) + std::popcount(h.a & (g.a << 1));
    return (t & 1) ? -1 : 1;
}

namespace {

inline int mask_square_sign(std::uint32_t a, int nu) {
    int t = std::popcount(a & (a << 1));
    if (nu == -1) t += std::popcount(a);
    return t & 1;
}

std::array<std::uint64_t, 5> census_loop(std::uint32_t n, int nu, bool parallel) {
    std::array<std::uint64_t, 5> counts{};
    const std::int64_t total = std::int64_t{1} << n;
    std::uint64_t ord2 = 0, ord4 = 0;
#pragma omp parallel for reduction(+ : ord2, ord4) if (parallel) schedule(static)
    for (std::int64_t m = 1; m < total; ++m) {
        if (mask_square_sign(static_cast<std::uint32_t>(m), nu))
            ord4 += 2;  // both signs of the same word
        else
            ord2 += 2;
    }
    counts[1] = 1;
    counts[2] = ord2 + 1;  // the central -1
    counts[4] = ord4;
    return counts;
}

}  // namespace

std::array<std::uint64_t, 5> order_census_serial(std::uint32_t n, int nu) {
    check_args(n, nu, kMaxCensusN);
    return census_loop(n, nu, false);
}

std::array<std::uint64_t, 5> order_census_parallel(std::uint32_t n, int nu) {
    check_args(n, nu, kMaxCensusN);
    return census_loop(n, nu, true);
}

std::pair<std::vector<EElement>, CenterType> center_of(std::uint32_t n, int nu) {
    check_args(n, nu);
    std::vector<EElement> center;
    for (std::uint32_t a = 0; a < (1u << n); ++a) {
        const EElement g{n, nu, 0, a};
        bool central = true;
        for (std::uint32_t i = 1; i <= n && central; ++i)
            central = e_commutator_sign(g, EElement::generator(n, nu, i)) == 1;
        if (central) {
            center.push_back(g);
            center.push_back(e_negate(g));
        }
    }
    CenterType t;
    if (center.size() == 2) {
        t = CenterType::Z2;
    } else {
        bool has4 = false;
        for (const auto& g : center) has4 = has4 || e_order(g) == 4;
        t = has4 ? CenterType::Z4 : CenterType::Z2xZ2;
    }
    return {center, t};
}

EGroupRecord enumerate_e(std::uint32_t n, int nu) {
    check_args(n, nu);
    EGroupRecord rec;
    rec.n = n;
    rec.nu = nu;
    rec.order = std::uint64_t{1} << (n + 1);
    const auto counts = order_census_parallel(n, nu);
    for (int ord : {1, 2, 4})
        if (counts[static_cast<std::size_t>(ord)] > 0)
            rec.order_histogram[ord] = counts[static_cast<std::size_t>(ord)];
    auto [center, type] = center_of(n, nu);
    rec.center = std::move(center);
    rec.center_type = type;
    return rec;
}

PauliString e_image(const EElement& g, const std::vector<PauliString>& img) {
    if (img.size() < g.n) throw std::invalid_argument("missing generator images");
    PauliString acc = PauliString::phase(img[0].k, g.s ? 4 : 0);
    for (std::uint32_t i = 1; i <= g.n; ++i)
        if (g.a & (1u << (i - 1))) acc = ps_mul(acc, img[i - 1]);
    return acc;
}

Report verify_e_relations(std::uint32_t n, int nu, const std::vector<PauliString>& img) {
    check_args(n, nu);
    Report rep;
    rep.case_name = "e-relations n=" + std::to_string(n) + " nu=" + std::to_string(nu);
    if (img.size() < n) {
        rep.add("arity", "one image per generator", false);
        return rep;
    }
    const std::uint32_t k = img[0].k;
    const PauliString sq_target = PauliString::phase(k, nu == -1 ? 4 : 0);
    bool squares = true, adjacent = true, distant = true;
    for (std::uint32_t i = 0; i < n; ++i) squares = squares && ps_mul(img[i], img[i]) == sq_target;
    for (std::uint32_t i = 0; i + 1 < n; ++i)
        adjacent = adjacent && ps_commutator_sign(img[i], img[i + 1]) == -1;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 2; j < n; ++j)
            distant = distant && ps_commutator_sign(img[i], img[j]) == 1;
    rep.add("squares", "every generator image squares to nu", squares);
    rep.add("adjacent", "adjacent images anticommute", adjacent);
    rep.add("distant", "distant images commute", distant);
    return rep;
}

std::vector<EElement> rep_kernel(std::uint32_t n, int nu, const std::vector<PauliString>& img) {
    const Report rel = verify_e_relations(n, nu, img);
    if (!rel.all_pass())
        throw std::invalid_argument("generator images do not satisfy the defining relations");
    const PauliString id = PauliString::identity(img[0].k);
    std::vector<EElement> kernel;
    for (std::uint32_t a = 0; a < (1u << n); ++a)
        for (std::uint8_t s = 0; s <= 1; ++s) {
            const EElement g{n, nu, s, a};
            if (g.is_identity()) continue;
            if (e_image(g, img) == id) kernel.push_back(g);
        }
    return kernel;
}

}  // namespace beg
