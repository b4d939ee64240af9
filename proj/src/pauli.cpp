#include "beg/pauli.hpp"

#include <sstream>

namespace beg {

namespace {
int parity(std::uint32_t m) { return std::popcount(m) & 1; }
}  // namespace

std::string PauliString::to_string() const {
    static const char* even_phase[4] = {"", "i * ", "- ", "-i * "};
    std::ostringstream out;
    if (p % 2 == 0)
        out << even_phase[p / 2];
    else
        out << "zeta8^" << int(p) << " * ";
    bool any = false;
    for (std::uint32_t j = 1; j <= k; ++j) {
        const std::uint32_t b = qubit_bit(k, j);
        if (x & b) {
            out << "X" << j << " ";
            any = true;
        }
        if (z & b) {
            out << "Z" << j << " ";
            any = true;
        }
    }
    std::string s = out.str();
    if (!any) s += "1";
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

PauliString ps_mul(const PauliString& g, const PauliString& h) {
    if (g.k != h.k) throw std::invalid_argument("pauli width mismatch");
    PauliString r;
    r.k = g.k;
    r.p = static_cast<std::uint8_t>((g.p + h.p + 4 * parity(g.z & h.x)) % 8);
    r.x = g.x ^ h.x;
    r.z = g.z ^ h.z;
    return r;
}

PauliString ps_inverse(const PauliString& g) {
    PauliString r = g;
    r.p = static_cast<std::uint8_t>(((8 - g.p) + 4 * parity(g.x & g.z)) % 8);
    return r;
}

PauliString ps_negate(const PauliString& g) {
    PauliString r = g;
    r.p = static_cast<std::uint8_t>((g.p + 4) % 8);
    return r;
}

int ps_order(const PauliString& g) {
    PauliString acc = g;
    int m = 1;
    while (!acc.is_identity()) {
        acc = ps_mul(acc, g);
        ++m;
        if (m > 8) throw std::logic_error("pauli order exceeds 8");
    }
    return m;
}

int ps_commutator_sign(const PauliString& g, const PauliString& h) {
    if (g.k != h.k) throw std::invalid_argument("pauli width mismatch");
    return (parity(g.z & h.x) == parity(g.x & h.z)) ? 1 : -1;
}

ExactMatrix to_matrix(const PauliString& g) {
    const std::size_t dim = std::size_t{1} << g.k;
    ExactMatrix m(dim);
    const CycScalar ph = CycScalar::zeta8_pow(g.p);
    for (std::size_t b = 0; b < dim; ++b) {
        const int s = parity(g.z & static_cast<std::uint32_t>(b));
        m.at(b ^ g.x, b) = s ? -ph : ph;
    }
    return m;
}

std::vector<PauliString> generators_rho(std::uint32_t k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    std::vector<PauliString> out;
    out.reserve(2 * k);
    for (std::uint32_t i = 1; i <= k; ++i) {
        PauliString odd{k, 2, 0, 0};  // i * Z-chain
        odd.z = PauliString::qubit_bit(k, i);
        if (i >= 2) odd.z |= PauliString::qubit_bit(k, i - 1);
        out.push_back(odd);
        out.push_back(PauliString::y_op(k, i));
    }
    return out;
}

std::vector<PauliString> generators_lambda(std::uint32_t k, int branch) {
    if (branch != 1 && branch != 2) throw std::invalid_argument("branch must be 1 or 2");
    auto out = generators_rho(k);
    PauliString last{k, static_cast<std::uint8_t>(branch == 1 ? 2 : 6), 0,
                     PauliString::qubit_bit(k, k)};
    out.push_back(last);
    return out;
}

std::vector<PauliString> generators_pauli(std::uint32_t k, bool with_phase) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    std::vector<PauliString> out;
    for (std::uint32_t j = 1; j <= k; ++j) out.push_back(PauliString::x_op(k, j));
    for (std::uint32_t j = 1; j <= k; ++j) out.push_back(PauliString::z_op(k, j));
    if (with_phase) out.push_back(PauliString::phase(k, 2));
    return out;
}

std::vector<PauliString> rescale_by_i(const std::vector<PauliString>& gens) {
    std::vector<PauliString> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(ps_mul(PauliString::phase(g.k, 2), g));
    return out;
}

Report pauli_from_e(std::uint32_t k) {
    Report rep;
    rep.case_name = "pauli_from_e k=" + std::to_string(k);
    const auto img = generators_rho(k);
    for (std::uint32_t i = 1; i <= k; ++i) {
        const PauliString yi = PauliString::y_op(k, i);
        rep.add("Y" + std::to_string(i), "Y_i equals the image of e_2i",
                yi == img[2 * i - 1], img[2 * i - 1].to_string());

        PauliString chain = PauliString::phase(k, static_cast<int>(6 * i));  // (-i)^i
        for (std::uint32_t j = 1; j <= i; ++j) chain = ps_mul(chain, img[2 * j - 2]);
        const PauliString zi = PauliString::z_op(k, i);
        rep.add("Z" + std::to_string(i),
                "Z_i equals (-i)^i times the product of images of e_1, e_3, ..., e_2i-1",
                zi == chain, chain.to_string());

        const PauliString xi = PauliString::x_op(k, i);
        rep.add("X" + std::to_string(i), "X_i equals Z_i Y_i", xi == ps_mul(zi, yi),
                ps_mul(zi, yi).to_string());
    }
    return rep;
}

}  // namespace beg
