#include "beg/exact_matrix.hpp"

namespace beg {

ExactMatrix tensor(const ExactMatrix& a, const ExactMatrix& b) {
    const std::size_t da = a.dim(), db = b.dim();
    ExactMatrix r(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            const CycScalar& v = a.at(i, j);
            if (v.is_zero()) continue;
            for (std::size_t p = 0; p < db; ++p)
                for (std::size_t q = 0; q < db; ++q)
                    r.at(i * db + p, j * db + q) = v * b.at(p, q);
        }
    return r;
}

std::optional<CycScalar> equal_up_to_phase(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.dim() != b.dim()) return std::nullopt;
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (b.at(i, j).is_zero()) continue;
            auto c = a.at(i, j).divide_exact(b.at(i, j));
            if (!c || !c->is_unit_modulus()) return std::nullopt;
            if (a == b.scaled(*c)) return c;
            return std::nullopt;
        }
    return std::nullopt;  // b = 0 has no unit-phase multiple
}

std::vector<CycScalar> apply(const ExactMatrix& m, const std::vector<CycScalar>& v) {
    if (v.size() != m.dim()) throw std::invalid_argument("matrix/vector dimension mismatch");
    std::vector<CycScalar> r(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) r[i] += m.at(i, j) * v[j];
    return r;
}

}  // namespace beg
