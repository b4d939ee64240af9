#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace beg {

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(std::size_t cap)
        : std::runtime_error("group closure exceeded element cap " + std::to_string(cap)),
          cap(cap) {}
    std::size_t cap;
};

constexpr std::size_t kDefaultElementCap = 10'000'000;

/// Closed element set with deterministic discovery-order indexing.
template <class Elem>
struct FiniteGroupRecord {
    std::vector<Elem> elements;         // elements[0] is the identity
    std::vector<std::size_t> generators;
    std::vector<std::size_t> center;
    std::map<int, std::uint64_t> order_histogram;

    std::size_t order() const { return elements.size(); }

    std::uint64_t count_of_order(int ord) const {
        auto it = order_histogram.find(ord);
        return it == order_histogram.end() ? 0 : it->second;
    }

    bool contains(const Elem& g) const {
        for (const auto& e : elements)
            if (e == g) return true;
        return false;
    }
};

/// Breadth-first Cayley closure of <gens>.  Finiteness makes closure under
/// right multiplication by generators sufficient; inverses appear as powers.
template <class Elem, class Mul>
FiniteGroupRecord<Elem> close_group(const Elem& identity, const std::vector<Elem>& gens,
                                    Mul mul, std::size_t cap = kDefaultElementCap) {
    FiniteGroupRecord<Elem> rec;
    std::unordered_map<Elem, std::size_t> index;
    rec.elements.push_back(identity);
    index.emplace(identity, 0);
    for (const auto& g : gens) {
        auto [it, fresh] = index.emplace(g, rec.elements.size());
        if (fresh) rec.elements.push_back(g);
        rec.generators.push_back(it->second);
    }
    for (std::size_t head = 0; head < rec.elements.size(); ++head) {
        for (const auto& g : gens) {
            Elem next = mul(rec.elements[head], g);
            auto [it, fresh] = index.emplace(next, rec.elements.size());
            if (fresh) {
                if (rec.elements.size() >= cap) throw CapExceeded(cap);
                rec.elements.push_back(std::move(next));
            }
        }
    }
    // order histogram and center
    for (const auto& e : rec.elements) {
        Elem acc = e;
        int ord = 1;
        while (!(acc == identity)) {
            acc = mul(acc, e);
            ++ord;
        }
        ++rec.order_histogram[ord];
    }
    for (std::size_t i = 0; i < rec.elements.size(); ++i) {
        bool central = true;
        for (auto gi : rec.generators)
            central = central && mul(rec.elements[i], rec.elements[gi]) ==
                                     mul(rec.elements[gi], rec.elements[i]);
        if (central) rec.center.push_back(i);
    }
    return rec;
}

}  // namespace beg
