#include "beg/braid.hpp"

#include <deque>
#include <sstream>
#include <unordered_map>

namespace beg {

std::string to_string(BraidVariant v) {
    switch (v) {
        case BraidVariant::Unscaled: return "unscaled";
        case BraidVariant::Jones: return "jones";
        case BraidVariant::Lambda1: return "lambda1";
        case BraidVariant::Lambda2: return "lambda2";
    }
    return "?";
}

std::optional<BraidVariant> parse_variant(const std::string& s) {
    if (s == "unscaled") return BraidVariant::Unscaled;
    if (s == "jones") return BraidVariant::Jones;
    if (s == "lambda1") return BraidVariant::Lambda1;
    if (s == "lambda2") return BraidVariant::Lambda2;
    return std::nullopt;
}

std::string BraidWord::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) out << " ";
        out << "b" << (letters[i] < 0 ? -letters[i] : letters[i]);
        if (letters[i] < 0) out << "^-1";
    }
    if (letters.empty()) out << "1";
    return out.str();
}

std::vector<PauliString> t_images(const BraidRepSpec& spec) {
    switch (spec.variant) {
        case BraidVariant::Unscaled:
        case BraidVariant::Jones: return generators_rho(spec.k);
        case BraidVariant::Lambda1: return generators_lambda(spec.k, 1);
        case BraidVariant::Lambda2: return generators_lambda(spec.k, 2);
    }
    throw std::logic_error("unreachable");
}

std::vector<ExactMatrix> build_r_matrices(const BraidRepSpec& spec) {
    const std::size_t d = std::size_t{1} << spec.k;
    const ExactMatrix id = ExactMatrix::identity(d);
    const CycScalar inv_sqrt2 = CycScalar::inv_sqrt2();
    // -exp(-i pi/4) = zeta8^3
    const CycScalar jones_phase = CycScalar::zeta8_pow(3);
    std::vector<ExactMatrix> out;
    for (const auto& t : t_images(spec)) {
        ExactMatrix r = (id + to_matrix(t)).scaled(inv_sqrt2);
        if (spec.variant == BraidVariant::Jones) r = r.scaled(jones_phase);
        out.push_back(std::move(r));
    }
    return out;
}

Report theorem3_hypotheses(const std::vector<PauliString>& t_imgs) {
    Report rep;
    rep.case_name = "braid-matrix hypotheses";
    std::vector<ExactMatrix> t;
    for (const auto& g : t_imgs) t.push_back(to_matrix(g));
    const std::size_t n = t.size();
    const ExactMatrix minus_id = ExactMatrix::identity(t[0].dim()).scaled(-CycScalar::one());

    bool squares = true, far = true, adjacent = true, anti = true;
    for (std::size_t i = 0; i < n; ++i) squares = squares && t[i] * t[i] == minus_id;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 2; j < n; ++j) far = far && t[i] * t[j] == t[j] * t[i];
    for (std::size_t i = 0; i + 1 < n; ++i)
        adjacent = adjacent && t[i] * t[i + 1] == (t[i + 1] * t[i]).scaled(-CycScalar::one());
    for (std::size_t i = 0; i < n; ++i)
        anti = anti && t[i].dagger() == t[i].scaled(-CycScalar::one());

    rep.add("squares", "every generator image squares to -I", squares);
    rep.add("far_commute", "distant images commute", far);
    rep.add("adjacent_anticommute", "adjacent images anticommute", adjacent);
    rep.add("anti_hermitian", "every image is anti-Hermitian", anti);
    return rep;
}

Report verify_braid_presentation(const std::vector<ExactMatrix>& mats) {
    Report rep;
    rep.case_name = "braid presentation";
    const std::size_t n = mats.size();
    bool far = true, braid = true, unitary = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 2; j < n; ++j) far = far && mats[i] * mats[j] == mats[j] * mats[i];
    for (std::size_t i = 0; i + 1 < n; ++i)
        braid = braid &&
                mats[i] * mats[i + 1] * mats[i] == mats[i + 1] * mats[i] * mats[i + 1];
    for (std::size_t i = 0; i < n; ++i) unitary = unitary && mats[i].is_unitary();
    rep.add("far_commute", "distant braid matrices commute", far);
    rep.add("braid_relation", "adjacent matrices satisfy the braid relation", braid);
    rep.add("unitary", "every braid matrix is unitary", unitary);
    return rep;
}

std::vector<CycScalar> apply_word(const BraidRepSpec& spec, const BraidWord& word,
                                  const std::vector<CycScalar>& state) {
    if (word.n != spec.strands()) throw std::invalid_argument("word strand count mismatch");
    if (state.size() != (std::size_t{1} << spec.k))
        throw std::invalid_argument("state dimension mismatch");
    const auto mats = build_r_matrices(spec);
    std::vector<CycScalar> v = state;
    // left action: the last letter acts first
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
        const int l = *it;
        const std::size_t i = static_cast<std::size_t>(l < 0 ? -l : l);
        if (i < 1 || i > mats.size()) throw std::invalid_argument("letter out of range");
        v = beg::apply(l > 0 ? mats[i - 1] : mats[i - 1].dagger(), v);
    }
    return v;
}

namespace {

Perm identity_perm(std::uint32_t n) {
    Perm p(n);
    for (std::uint32_t i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>(i);
    return p;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

void fill_histogram_and_center(FiniteGroupRecord<ExactMatrix>& rec) {
    const ExactMatrix id = ExactMatrix::identity(rec.elements[0].dim());
    for (const auto& e : rec.elements) {
        ExactMatrix acc = e;
        int ord = 1;
        while (!(acc == id)) {
            acc = acc * e;
            ++ord;
        }
        ++rec.order_histogram[ord];
    }
    for (std::size_t i = 0; i < rec.elements.size(); ++i) {
        bool central = true;
        for (auto gi : rec.generators)
            central = central && rec.elements[i] * rec.elements[gi] ==
                                     rec.elements[gi] * rec.elements[i];
        if (central) rec.center.push_back(i);
    }
}

}  // namespace

ImageRecord image_group(const BraidRepSpec& spec, std::size_t cap) {
    const auto mats = build_r_matrices(spec);
    const std::uint32_t strands = spec.strands();
    const std::size_t d = std::size_t{1} << spec.k;

    std::vector<ExactMatrix> gens;
    std::vector<Perm> gen_perms;
    for (std::size_t i = 0; i < mats.size(); ++i) {
        Perm tau = identity_perm(strands);
        std::swap(tau[i], tau[i + 1]);
        gens.push_back(mats[i]);
        gen_perms.push_back(tau);
        gens.push_back(mats[i].dagger());  // inverse, valid by unitarity
        gen_perms.push_back(tau);
    }

    ImageRecord rec;
    rec.consistent = true;
    std::unordered_map<ExactMatrix, std::size_t> index;
    rec.group.elements.push_back(ExactMatrix::identity(d));
    rec.perms.push_back(identity_perm(strands));
    index.emplace(rec.group.elements[0], 0);
    for (std::size_t head = 0; head < rec.group.elements.size(); ++head) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
            ExactMatrix next = rec.group.elements[head] * gens[g];
            Perm next_perm = compose(rec.perms[head], gen_perms[g]);
            auto it = index.find(next);
            if (it == index.end()) {
                if (rec.group.elements.size() >= cap) throw CapExceeded(cap);
                index.emplace(next, rec.group.elements.size());
                rec.group.elements.push_back(std::move(next));
                rec.perms.push_back(std::move(next_perm));
            } else if (rec.perms[it->second] != next_perm) {
                rec.consistent = false;
            }
        }
    }
    for (std::size_t i = 0; i < mats.size(); ++i) rec.group.generators.push_back(index.at(mats[i]));
    fill_histogram_and_center(rec.group);

    // pure image: conjugation orbit of the generator squares, then closure
    std::vector<ExactMatrix> orbit;
    std::unordered_map<ExactMatrix, bool> seen;
    for (const auto& m : mats) {
        ExactMatrix sq = m * m;
        if (!seen.count(sq)) {
            seen.emplace(sq, true);
            orbit.push_back(sq);
        }
    }
    for (std::size_t head = 0; head < orbit.size(); ++head) {
        for (const auto& g : mats) {
            for (const ExactMatrix& c : {g * orbit[head] * g.dagger(),
                                         g.dagger() * orbit[head] * g}) {
                if (!seen.count(c)) {
                    seen.emplace(c, true);
                    orbit.push_back(c);
                }
            }
        }
    }
    rec.pure = close_group(ExactMatrix::identity(d), orbit,
                           [](const ExactMatrix& a, const ExactMatrix& b) { return a * b; }, cap);
    return rec;
}

std::optional<GhzPhase> ghz_test(const std::vector<CycScalar>& state) {
    const std::size_t dim = state.size();
    if (dim < 2) return std::nullopt;
    for (std::size_t i = 1; i + 1 < dim; ++i)
        if (!state[i].is_zero()) return std::nullopt;
    const CycScalar& s0 = state[0];
    const CycScalar& s1 = state[dim - 1];
    if (s0.is_zero() || s1.is_zero()) return std::nullopt;
    for (int a = 0; a < 8; ++a) {
        if (s1 == s0 * CycScalar::zeta8_pow(a)) {
            const CycScalar c = s0 * CycScalar::sqrt2();
            if (!c.is_unit_modulus()) return std::nullopt;
            return GhzPhase{c, a};
        }
    }
    return std::nullopt;
}

std::optional<BraidWord> ghz_search(const BraidRepSpec& spec, std::uint32_t max_len) {
    const auto mats = build_r_matrices(spec);
    const std::size_t d = std::size_t{1} << spec.k;
    std::vector<CycScalar> start(d);
    start[0] = CycScalar::one();

    struct Node {
        std::vector<CycScalar> state;
        std::size_t parent;
        int letter;
        std::uint32_t depth;
    };
    const auto state_hash = [](const std::vector<CycScalar>& v) {
        std::size_t h = v.size();
        for (const auto& s : v) h = h * 1000003u + s.hash();
        return h;
    };
    std::unordered_map<std::size_t, std::vector<std::size_t>> seen;  // hash -> node ids
    std::vector<Node> nodes;

    const auto visited = [&](const std::vector<CycScalar>& v) {
        auto it = seen.find(state_hash(v));
        if (it == seen.end()) return false;
        for (auto id : it->second)
            if (nodes[id].state == v) return true;
        return false;
    };
    const auto reconstruct = [&](std::size_t id) {
        BraidWord w;
        w.n = spec.strands();
        // walking to the root yields the last-applied letter first, which is
        // exactly the operator-product order apply_word expects
        while (nodes[id].letter != 0) {
            w.letters.push_back(nodes[id].letter);
            id = nodes[id].parent;
        }
        return w;
    };

    nodes.push_back({start, 0, 0, 0});
    seen[state_hash(start)].push_back(0);
    if (ghz_test(start)) return reconstruct(0);

    for (std::size_t head = 0; head < nodes.size(); ++head) {
        if (nodes[head].depth >= max_len) continue;
        for (std::size_t i = 0; i < mats.size(); ++i) {
            for (int sign : {1, -1}) {
                auto next =
                    beg::apply(sign > 0 ? mats[i] : mats[i].dagger(), nodes[head].state);
                if (visited(next)) continue;
                const std::size_t id = nodes.size();
                seen[state_hash(next)].push_back(id);
                nodes.push_back({std::move(next), head,
                                 sign * static_cast<int>(i + 1), nodes[head].depth + 1});
                if (ghz_test(nodes[id].state)) return reconstruct(id);
            }
        }
    }
    return std::nullopt;
}

}  // namespace beg
