#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <unordered_set>

#include "beg/e_group.hpp"

using namespace beg;

namespace {

EElement random_element(std::mt19937& rng, std::uint32_t n, int nu) {
    std::uniform_int_distribution<std::uint32_t> mask(0, (1u << n) - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    return {n, nu, static_cast<std::uint8_t>(sign(rng)), mask(rng)};
}

}  // namespace

TEST_CASE("defining relations") {
    const std::uint32_t n = 4;
    for (int nu : {-1, 1}) {
        const auto e1 = EElement::generator(n, nu, 1);
        const auto e2 = EElement::generator(n, nu, 2);
        const auto e3 = EElement::generator(n, nu, 3);
        CHECK(e_mul(e2, e1) == e_negate(e_mul(e1, e2)));
        CHECK(e_mul(e1, e3) == e_mul(e3, e1));
        CHECK(e_mul(e1, e1) ==
              (nu == -1 ? EElement::minus_one(n, nu) : EElement::identity(n, nu)));
    }
}

TEST_CASE("element orders") {
    CHECK(e_order(EElement::identity(3, -1)) == 1);
    CHECK(e_order(EElement::generator(3, -1, 1)) == 4);
    CHECK(e_order(EElement::generator(3, 1, 1)) == 2);
    // e1 e3 squares to (-1)^2 = +1
    CHECK(e_order(EElement{3, -1, 0, 0b101}) == 2);
}

TEST_CASE("enumerated histograms of the order-8 base cases") {
    const auto q = enumerate_e(2, -1);
    CHECK(q.order == 8);
    CHECK(q.order_histogram.at(1) == 1);
    CHECK(q.order_histogram.at(2) == 1);
    CHECK(q.order_histogram.at(4) == 6);

    const auto d = enumerate_e(2, 1);
    CHECK(d.order == 8);
    CHECK(d.order_histogram.at(2) == 5);
    CHECK(d.order_histogram.at(4) == 2);
}

TEST_CASE("the 32-element group at n=4") {
    const auto rec = enumerate_e(4, -1);
    CHECK(rec.order == 32);
    CHECK(rec.order_histogram.at(2) == 11);  // plus the identity gives 12 of order <= 2
    CHECK(rec.order_histogram.at(4) == 20);
    CHECK(rec.center_type == CenterType::Z2);
}

TEST_CASE("group order is 2^(n+1) for n = 1..10") {
    for (std::uint32_t n = 1; n <= 10; ++n)
        for (int nu : {-1, 1}) {
            const auto rec = enumerate_e(n, nu);
            CHECK(rec.order == (std::uint64_t{1} << (n + 1)));
            std::uint64_t total = 0;
            for (const auto& [ord, count] : rec.order_histogram) total += count;
            CHECK(total == rec.order);
        }
}

TEST_CASE("centers") {
    CHECK(center_of(4, -1).second == CenterType::Z2);
    CHECK(center_of(4, -1).first.size() == 2);
    CHECK(center_of(3, -1).second == CenterType::Z2xZ2);
    CHECK(center_of(3, -1).first.size() == 4);
    CHECK(center_of(5, -1).second == CenterType::Z4);
    CHECK(center_of(3, 1).second == CenterType::Z2xZ2);
    // quotient by {+-1} is elementary abelian: every square is central
    for (std::uint32_t a = 0; a < 16; ++a) {
        const EElement g{4, -1, 0, a};
        CHECK(e_mul(g, g).a == 0);
    }
}

TEST_CASE("serial and parallel censuses agree") {
    for (std::uint32_t n : {3u, 8u, 14u})
        for (int nu : {-1, 1}) CHECK(order_census_serial(n, nu) == order_census_parallel(n, nu));
}

TEST_CASE("homomorphism to the concrete images, exhaustively at n<=6") {
    for (std::uint32_t n : {2u, 4u, 6u}) {
        const auto img = generators_rho(n / 2);
        for (std::uint32_t a = 0; a < (1u << n); ++a)
            for (std::uint8_t s = 0; s <= 1; ++s) {
                const EElement g{n, -1, s, a};
                for (std::uint32_t b = 0; b < (1u << n); ++b) {
                    const EElement h{n, -1, 0, b};
                    CHECK(e_image(e_mul(g, h), img) ==
                          ps_mul(e_image(g, img), e_image(h, img)));
                }
            }
    }
}

TEST_CASE("homomorphism at n=8, randomized") {
    const auto img = generators_rho(4);
    std::mt19937 rng(808);
    for (int trial = 0; trial < 500; ++trial) {
        const auto g = random_element(rng, 8, -1), h = random_element(rng, 8, -1);
        CHECK(e_image(e_mul(g, h), img) == ps_mul(e_image(g, img), e_image(h, img)));
    }
}

TEST_CASE("image orders match abstract orders under a faithful representation") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_element(rng, 6, -1);
        CHECK(e_order(g) == ps_order(e_image(g, generators_rho(3))));
    }
}

TEST_CASE("rho is faithful at even n") {
    for (std::uint32_t n : {2u, 4u, 6u, 8u})
        CHECK(rep_kernel(n, -1, generators_rho(n / 2)).empty());
}

TEST_CASE("lambda has a kernel on the Z2xZ2-center group at n=3") {
    const auto kernel = rep_kernel(3, -1, generators_lambda(1, 1));
    REQUIRE_FALSE(kernel.empty());
    // lambda(e1) lambda(e3) = (iZ)(iZ) = -1, so -e1 e3 maps to the identity
    const EElement witness{3, -1, 1, 0b101};
    bool found = false;
    for (const auto& g : kernel) found = found || g == witness;
    CHECK(found);
}

TEST_CASE("rep_kernel rejects non-representations") {
    // X, X does not anticommute
    std::vector<PauliString> bad{PauliString::x_op(1, 1), PauliString::x_op(1, 1)};
    CHECK_THROWS_AS(rep_kernel(2, -1, bad), std::invalid_argument);
}

TEST_CASE("order-4 count is twice the cyclic order-4 subgroup count") {
    for (std::uint32_t n : {2u, 4u, 5u})
        for (int nu : {-1, 1}) {
            std::unordered_set<std::uint64_t> subgroups;
            std::uint64_t order4 = 0;
            for (std::uint32_t a = 0; a < (1u << n); ++a)
                for (std::uint8_t s = 0; s <= 1; ++s) {
                    const EElement g{n, nu, s, a};
                    if (e_order(g) != 4) continue;
                    ++order4;
                    // key the subgroup {1, g, g^2, g^3} by its two generators
                    const auto g3 = e_mul(e_mul(g, g), g);
                    const std::uint64_t k1 = (std::uint64_t{g.a} << 1) | g.s;
                    const std::uint64_t k2 = (std::uint64_t{g3.a} << 1) | g3.s;
                    subgroups.insert(std::min(k1, k2) << 32 | std::max(k1, k2));
                }
            CHECK(order4 == 2 * subgroups.size());
            const auto rec = enumerate_e(n, nu);
            CHECK(order4 == (rec.order_histogram.count(4) ? rec.order_histogram.at(4) : 0));
        }
}
