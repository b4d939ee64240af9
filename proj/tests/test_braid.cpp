#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "beg/braid.hpp"

using namespace beg;

namespace {

std::vector<CycScalar> basis_state(std::size_t dim, std::size_t idx) {
    std::vector<CycScalar> v(dim, CycScalar::zero());
    v[idx] = CycScalar::one();
    return v;
}

}  // namespace

TEST_CASE("variant parsing round-trips") {
    for (auto v : {BraidVariant::Unscaled, BraidVariant::Jones, BraidVariant::Lambda1,
                   BraidVariant::Lambda2})
        CHECK(parse_variant(to_string(v)) == v);
    CHECK_FALSE(parse_variant("bogus").has_value());
}

TEST_CASE("strand counts") {
    CHECK(BraidRepSpec{1, BraidVariant::Unscaled}.strands() == 3);
    CHECK(BraidRepSpec{2, BraidVariant::Jones}.strands() == 5);
    CHECK(BraidRepSpec{1, BraidVariant::Lambda1}.strands() == 4);
    CHECK(BraidRepSpec{2, BraidVariant::Lambda2}.generator_count() == 5);
}

TEST_CASE("explicit one-qubit braid matrices") {
    const auto r = build_r_matrices({1, BraidVariant::Unscaled});
    REQUIRE(r.size() == 2);
    // (I + iZ)/sqrt2 = diag(zeta8, zeta8^-1)
    ExactMatrix d1(2);
    d1.at(0, 0) = CycScalar::zeta8_pow(1);
    d1.at(1, 1) = CycScalar::zeta8_pow(7);
    CHECK(r[0] == d1);
    // (I + Y)/sqrt2 with the real convention Y = ZX
    ExactMatrix d2(2);
    d2.at(0, 0) = CycScalar::inv_sqrt2();
    d2.at(0, 1) = CycScalar::inv_sqrt2();
    d2.at(1, 0) = -CycScalar::inv_sqrt2();
    d2.at(1, 1) = CycScalar::inv_sqrt2();
    CHECK(r[1] == d2);
}

TEST_CASE("third two-qubit generator acts through i Z1 Z2") {
    const auto r = build_r_matrices({2, BraidVariant::Unscaled});
    REQUIRE(r.size() == 4);
    const auto t = to_matrix(PauliString{2, 2, 0, 3});
    const auto expect =
        (ExactMatrix::identity(4) + t).scaled(CycScalar::inv_sqrt2());
    CHECK(r[2] == expect);
}

TEST_CASE("generator squares recover the t images") {
    const BraidRepSpec spec{2, BraidVariant::Unscaled};
    const auto r = build_r_matrices(spec);
    const auto t = t_images(spec);
    for (std::size_t i = 0; i < r.size(); ++i) CHECK(r[i] * r[i] == to_matrix(t[i]));
}

TEST_CASE("hypotheses on the t images") {
    for (std::uint32_t k = 1; k <= 3; ++k) {
        CHECK(theorem3_hypotheses(t_images({k, BraidVariant::Unscaled})).all_pass());
        CHECK(theorem3_hypotheses(t_images({k, BraidVariant::Lambda1})).all_pass());
        CHECK(theorem3_hypotheses(t_images({k, BraidVariant::Lambda2})).all_pass());
    }
    // negative control: involutive images square to +1, not -1
    CHECK_FALSE(theorem3_hypotheses(rescale_by_i(generators_rho(2))).all_pass());
}

TEST_CASE("braid presentation holds for every variant") {
    for (std::uint32_t k = 1; k <= 3; ++k)
        for (auto v : {BraidVariant::Unscaled, BraidVariant::Jones, BraidVariant::Lambda1,
                       BraidVariant::Lambda2}) {
            INFO("k=", k, " variant=", to_string(v));
            CHECK(verify_braid_presentation(build_r_matrices({k, v})).all_pass());
        }
}

TEST_CASE("scaled variant differs from the unscaled one by a fixed phase") {
    for (std::uint32_t k = 1; k <= 2; ++k) {
        const auto plain = build_r_matrices({k, BraidVariant::Unscaled});
        const auto scaled = build_r_matrices({k, BraidVariant::Jones});
        REQUIRE(plain.size() == scaled.size());
        for (std::size_t i = 0; i < plain.size(); ++i) {
            const auto c = equal_up_to_phase(scaled[i], plain[i]);
            REQUIRE(c.has_value());
            CHECK(*c == CycScalar::zeta8_pow(3));  // -exp(-i pi/4)
        }
    }
}

TEST_CASE("lambda variants extend the even-generator images") {
    for (std::uint32_t k = 1; k <= 3; ++k)
        for (auto v : {BraidVariant::Lambda1, BraidVariant::Lambda2}) {
            const auto ts = t_images({k, v});
            const auto rho = generators_rho(k);
            REQUIRE(ts.size() == rho.size() + 1);
            for (std::size_t i = 0; i < rho.size(); ++i) CHECK(ts[i] == rho[i]);
            // the extra image is -+ i Z_k
            CHECK(ts.back().x == 0);
            CHECK(ts.back().z == 1);
            CHECK(ts.back().p == (v == BraidVariant::Lambda1 ? 2 : 6));
        }
}

TEST_CASE("word application matches matrix products") {
    const BraidRepSpec spec{2, BraidVariant::Unscaled};
    const auto r = build_r_matrices(spec);
    const BraidWord word{spec.strands(), {1, -3, 2, 1}};
    const auto prod = r[0] * r[2].dagger() * r[1] * r[0];
    for (std::size_t idx = 0; idx < 4; ++idx) {
        const auto via_word = apply_word(spec, word, basis_state(4, idx));
        const auto via_mat = beg::apply(prod, basis_state(4, idx));
        CHECK(via_word == via_mat);
    }
    // empty word is the identity
    CHECK(apply_word(spec, BraidWord{spec.strands(), {}}, basis_state(4, 2)) ==
          basis_state(4, 2));
    // a letter then its inverse cancels
    CHECK(apply_word(spec, BraidWord{spec.strands(), {2, -2}}, basis_state(4, 1)) ==
          basis_state(4, 1));
}

TEST_CASE("image group on three strands") {
    const auto rec = image_group({1, BraidVariant::Unscaled});
    CHECK(rec.consistent);
    CHECK(rec.group.order() == 48);
    CHECK(rec.pure.order() == 8);
    // the pure part is quaternion: six order-4 elements
    CHECK(rec.pure.count_of_order(4) == 6);
    CHECK(rec.group.order() == rec.pure.order() * 6);  // times 3!
    // every pure element carries the trivial permutation
    for (std::size_t i = 0; i < rec.group.elements.size(); ++i)
        if (rec.pure.contains(rec.group.elements[i])) {
            const Perm& p = rec.perms[i];
            for (std::size_t s = 0; s < p.size(); ++s) CHECK(p[s] == s);
        }
}

TEST_CASE("scaled image group on three strands") {
    const auto rec = image_group({1, BraidVariant::Jones});
    CHECK(rec.consistent);
    // rescaling changes the pure image: the generator squares -iT_i now
    // multiply up to the scalar i, so the closure is the 16-element group
    // with complex-Pauli invariants rather than the 8-element dihedral one
    CHECK(rec.pure.order() == 16);
    CHECK(rec.pure.count_of_order(4) == 8);
    CHECK(rec.group.order() == rec.pure.order() * 6);
    // the scalar i is reached: X * square_2 = iZ, times Z gives i
    const auto i_mat = ExactMatrix::identity(2).scaled(CycScalar::imag());
    CHECK(rec.pure.contains(i_mat));
}

TEST_CASE("image group on five strands") {
    const auto rec = image_group({2, BraidVariant::Unscaled});
    CHECK(rec.consistent);
    CHECK(rec.pure.order() == 32);
    CHECK(rec.group.order() == 3840);  // 32 * 5!
}

TEST_CASE("image group respects the element cap") {
    CHECK_THROWS_AS(image_group({2, BraidVariant::Unscaled}, 100), CapExceeded);
}

TEST_CASE("ghz detection") {
    const auto c = CycScalar::inv_sqrt2();
    const auto bell = std::vector<CycScalar>{c, CycScalar::zero(), CycScalar::zero(), c};
    const auto g = ghz_test(bell);
    REQUIRE(g.has_value());
    CHECK(g->a == 0);
    CHECK(g->phase == CycScalar::one());

    // relative phase i
    const auto ibell = std::vector<CycScalar>{c, CycScalar::zero(), CycScalar::zero(),
                                              CycScalar::imag() * c};
    REQUIRE(ghz_test(ibell).has_value());
    CHECK(ghz_test(ibell)->a == 2);

    // global phase is reported
    const auto rot = std::vector<CycScalar>{CycScalar::zeta8_pow(1) * c, CycScalar::zero(),
                                            CycScalar::zero(), CycScalar::zeta8_pow(1) * c};
    REQUIRE(ghz_test(rot).has_value());
    CHECK(ghz_test(rot)->phase == CycScalar::zeta8_pow(1));

    // rejects: support off the corners, or non-unit normalization
    CHECK_FALSE(ghz_test({c, c, CycScalar::zero(), CycScalar::zero()}).has_value());
    const auto half = CycScalar(CycInt::one(), 2);
    CHECK_FALSE(ghz_test({half, CycScalar::zero(), CycScalar::zero(), half}).has_value());
    CHECK_FALSE(ghz_test(basis_state(4, 0)).has_value());
}

TEST_CASE("shortest ghz word on three strands") {
    const BraidRepSpec spec{1, BraidVariant::Unscaled};
    const auto word = ghz_search(spec, 4);
    REQUIRE(word.has_value());
    CHECK(word->letters.size() == 1);
    const auto state = apply_word(spec, *word, basis_state(2, 0));
    CHECK(ghz_test(state).has_value());
}

TEST_CASE("ghz word on five strands verifies") {
    const BraidRepSpec spec{2, BraidVariant::Unscaled};
    const auto word = ghz_search(spec, 6);
    REQUIRE(word.has_value());
    const auto state = apply_word(spec, *word, basis_state(4, 0));
    const auto g = ghz_test(state);
    REQUIRE(g.has_value());
    // no shorter word works: re-search with the bound just below
    if (word->letters.size() > 1)
        CHECK_FALSE(ghz_search(spec, static_cast<std::uint32_t>(word->letters.size()) - 1)
                        .has_value());
}

TEST_CASE("ghz search respects the length bound") {
    CHECK_FALSE(ghz_search({1, BraidVariant::Unscaled}, 0).has_value());
}
