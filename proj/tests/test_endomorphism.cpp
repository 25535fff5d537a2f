#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "skewlab/endomorphism.hpp"

using namespace skewlab;

TEST_CASE("eval0 on the Z2 window") {
    auto w = make_bounded_poly(make_zn(2), 2);
    auto& W = dynamic_cast<const BoundedPolyRing&>(*w);
    auto s = Endomorphism::eval_at_zero(w);

    Element t = W.from_coeffs({0, 1});
    CHECK(s->apply(t) == w->zero());
    CHECK_FALSE(s->injective());
    CHECK(s->preserves_unity());
    CHECK_FALSE(s->is_identity());

    // sigma(t^2+t+1) = 1
    CHECK(s->apply_power(1, W.from_coeffs({1, 1, 1})) == w->one());
    // fixed regression: not injective because sigma(t) = sigma(0) = 0
    CHECK(s->apply(t) == s->apply(w->zero()));
}

TEST_CASE("frobenius on GF(4)") {
    auto gf4 = make_galois_field(2, 2);
    auto& q = dynamic_cast<const PolyQuotientRing&>(*gf4);
    auto s = Endomorphism::frobenius(gf4, 2);

    Element w = q.from_coeffs({0, 1});
    // oracle: squaring in Z2[t] mod t^2+t+1
    CHECK(s->apply(w).index == oracle::gf4_mul(w.index, w.index));
    CHECK(s->apply(w) == q.from_coeffs({1, 1}));
    CHECK(s->injective());
    CHECK_FALSE(s->is_identity());

    // w^4 = w
    CHECK(s->apply_power(2, w) == w);
    CHECK(s->apply_power(0, w) == w);
}

TEST_CASE("swap on Z2xZ2") {
    auto z2 = make_zn(2);
    auto p = make_product(z2, z2);
    auto& P = dynamic_cast<const ProductRing&>(*p);
    auto s = Endomorphism::swap(p);

    CHECK(s->apply(P.pair_ix(1, 0)) == P.pair_ix(0, 1));
    CHECK(s->apply(P.pair_ix(1, 1)) == P.pair_ix(1, 1));
    CHECK(s->injective());
    CHECK(s->preserves_unity());
}

TEST_CASE("const_term on the dual numbers") {
    auto dual = make_poly_quotient(make_zn(2), {0, 0, 1});
    auto& q = dynamic_cast<const PolyQuotientRing&>(*dual);
    auto s = Endomorphism::constant_term(dual);

    for (std::uint64_t a = 0; a < 4; ++a) {
        auto d = q.digits(q.element(a));
        CHECK(s->apply(q.element(a)) == q.from_coeffs({d[0]}));
    }
    CHECK(s->preserves_unity());
    CHECK_FALSE(s->injective());
}

TEST_CASE("maps that violate the laws are rejected") {
    // squaring is not additive on Z4
    CHECK_THROWS_AS(Endomorphism::frobenius(make_zn(4), 2), NotAnEndomorphism);
    // const_term is not multiplicative on GF(4): t*t = t+1 but 0*0 = 0
    CHECK_THROWS_AS(Endomorphism::constant_term(make_galois_field(2, 2)), NotAnEndomorphism);
    // swap needs a product ring
    CHECK_THROWS_AS(Endomorphism::swap(make_zn(4)), NotAnEndomorphism);
    // eval0 needs a window
    CHECK_THROWS_AS(Endomorphism::eval_at_zero(make_zn(4)), NotAnEndomorphism);
    // tables must stay inside the ring
    auto z4 = make_zn(4);
    CHECK_THROWS_AS(Endomorphism::from_table(z4, {0, 1, 2, 7}), NotAnEndomorphism);
    CHECK_THROWS_AS(Endomorphism::from_table(z4, {0, 1, 2}), NotAnEndomorphism);
    // a non-endomorphism table: swap 1 and 2 in Z4 breaks additivity
    CHECK_THROWS_AS(Endomorphism::from_table(z4, {0, 2, 1, 3}), NotAnEndomorphism);
}

TEST_CASE("verify_endomorphism reports the law verdicts") {
    auto z4 = make_zn(4);
    std::vector<std::uint64_t> identity = {0, 1, 2, 3};
    auto rep = verify_endomorphism(*z4, identity);
    CHECK(rep.ok());
    CHECK(rep.identity);
    CHECK(rep.injective);
    CHECK(rep.preserves_unity);

    // x -> 3x on Z4 is additive but not multiplicative
    std::vector<std::uint64_t> triple = {0, 3, 2, 1};
    rep = verify_endomorphism(*z4, triple);
    CHECK(rep.additive);
    CHECK_FALSE(rep.multiplicative);
    CHECK_FALSE(rep.ok());

    // zero map is an endomorphism that kills the unit
    std::vector<std::uint64_t> zero = {0, 0, 0, 0};
    rep = verify_endomorphism(*z4, zero);
    CHECK(rep.ok());
    CHECK_FALSE(rep.preserves_unity);
}

TEST_CASE("iterated powers compose") {
    auto gf4 = make_galois_field(2, 2);
    auto s = Endomorphism::frobenius(gf4, 2);
    for (std::uint64_t i = 0; i <= 4; ++i)
        for (std::uint64_t j = 0; j <= 4; ++j)
            for (auto a : gf4->elements())
                CHECK(s->apply_power(i, s->apply_power(j, a)) == s->apply_power(i + j, a));
}

TEST_CASE("const_term fixes constants exhaustively on the dual numbers") {
    auto dual = make_poly_quotient(make_zn(2), {0, 0, 1});
    auto& q = dynamic_cast<const PolyQuotientRing&>(*dual);
    auto s = Endomorphism::constant_term(dual);
    CHECK(s->apply(q.from_coeffs({0, 1})) == dual->zero());
    CHECK(s->apply(q.from_coeffs({1, 1})) == dual->one());
    CHECK(s->apply(dual->one()) == dual->one());
    CHECK(s->apply(dual->zero()) == dual->zero());
}
