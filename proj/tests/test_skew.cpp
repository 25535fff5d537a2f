#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "skewlab/skew.hpp"

using namespace skewlab;

namespace {

struct WindowFixture {
    RingPtr ring = make_bounded_poly(make_zn(2), 2);
    const BoundedPolyRing& W = dynamic_cast<const BoundedPolyRing&>(*ring);
    EndoPtr eval0 = Endomorphism::eval_at_zero(ring);
    Element t = W.from_coeffs({0, 1});
};

// independent convolution over the window: window elements are Z2[t] bitmasks,
// the twist replaces a polynomial by its constant coefficient
oracle::SmallRing window_oracle() {
    return {8, oracle::z2x_add, [](oracle::u64 a, oracle::u64 b) { return oracle::z2x_mul(a, b); }};
}

}  // namespace

TEST_CASE("Ore rule x*a = sigma(a)*x") {
    WindowFixture F;
    SkewPoly x = SkewPoly::monomial(*F.ring, *F.eval0, F.ring->one(), 1);
    for (auto a : F.ring->elements()) {
        SkewPoly ca = SkewPoly::constant(*F.ring, *F.eval0, a);
        SkewPoly lhs = skew_mul(x, ca);
        SkewPoly rhs = SkewPoly::monomial(*F.ring, *F.eval0, F.eval0->apply(a), 1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("the witness product (t*x)*(t) vanishes") {
    WindowFixture F;
    SkewPoly p = SkewPoly::monomial(*F.ring, *F.eval0, F.t, 1);   // t*x
    SkewPoly q = SkewPoly::constant(*F.ring, *F.eval0, F.t);      // t

    // oracle: direct convolution with sigma(t) = t(0) = 0
    auto sig = [](int i, oracle::u64 a) { return i == 0 ? a : a & 1; };
    auto conv = oracle::skew_convolve(window_oracle(), sig, {0, F.t.index}, {F.t.index});
    CHECK(oracle::all_zero(conv));

    CHECK(skew_mul(p, q).is_zero());
    CHECK(is_zero_product(p, q));
    // and the untwisted coefficient product t*t = t^2 is nonzero
    CHECK_FALSE(F.ring->is_zero(F.ring->mul(F.t, F.t)));
}

TEST_CASE("multiplicative unit of the skew ring") {
    WindowFixture F;
    SkewPoly one = SkewPoly::constant(*F.ring, *F.eval0, F.ring->one());
    SkewPoly p = SkewPoly::from_indices(*F.ring, *F.eval0, std::vector<std::uint64_t>{3, 2, 5});
    CHECK(skew_mul(p, one) == p);
    CHECK(skew_mul(one, p) == p);
}

TEST_CASE("addition, scalars, coefficients") {
    WindowFixture F;
    // (t + x) + t = x over the char-2 window
    SkewPoly tpx(*F.ring, *F.eval0, {F.t, F.ring->one()});
    SkewPoly tc = SkewPoly::constant(*F.ring, *F.eval0, F.t);
    SkewPoly x = SkewPoly::monomial(*F.ring, *F.eval0, F.ring->one(), 1);
    CHECK(skew_add(tpx, tc) == x);

    SkewPoly tx = SkewPoly::monomial(*F.ring, *F.eval0, F.t, 1);
    CHECK(tx.coefficient(1) == F.t);
    CHECK(tx.coefficient(5) == F.ring->zero());
    CHECK(tx.degree() == 1);

    CHECK(scalar_mul(F.t, x) == tx);
    CHECK(scalar_mul(F.ring->zero(), tpx).is_zero());
}

TEST_CASE("mixing rings or endomorphisms is rejected") {
    WindowFixture F;
    auto id = Endomorphism::identity(F.ring);
    SkewPoly a = SkewPoly::constant(*F.ring, *F.eval0, F.t);
    SkewPoly b = SkewPoly::constant(*F.ring, *id, F.t);
    CHECK_THROWS_AS(skew_mul(a, b), EndoMismatch);
    CHECK_THROWS_AS(skew_add(a, b), EndoMismatch);

    auto z4 = make_zn(4);
    auto id4 = Endomorphism::identity(z4);
    SkewPoly c = SkewPoly::constant(*z4, *id4, z4->element(2));
    CHECK_THROWS_AS(skew_mul(a, c), RingMismatch);
}

TEST_CASE("degree law") {
    // equality on a domain with injective twist
    auto gf4 = make_galois_field(2, 2);
    auto frob = Endomorphism::frobenius(gf4, 2);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<std::uint64_t> pc(1 + rng() % 3), qc(1 + rng() % 3);
        for (auto& c : pc) c = rng() % 4;
        for (auto& c : qc) c = rng() % 4;
        SkewPoly p = SkewPoly::from_indices(*gf4, *frob, pc);
        SkewPoly q = SkewPoly::from_indices(*gf4, *frob, qc);
        SkewPoly pq = skew_mul(p, q);
        if (p.is_zero() || q.is_zero()) {
            CHECK(pq.is_zero());
        } else {
            CHECK(pq.degree() <= p.degree() + q.degree());
            CHECK(pq.degree() == p.degree() + q.degree());
        }
    }

    // strict drop happens when the twist is not injective
    WindowFixture F;
    SkewPoly x = SkewPoly::monomial(*F.ring, *F.eval0, F.ring->one(), 1);
    SkewPoly tc = SkewPoly::constant(*F.ring, *F.eval0, F.t);
    CHECK(skew_mul(x, tc).degree() < x.degree() + tc.degree());
}

TEST_CASE("associativity and distributivity of skew products") {
    struct Case {
        RingPtr ring;
        EndoPtr endo;
    };
    auto z2 = make_zn(2);
    std::vector<Case> cases;
    cases.push_back({make_zn(4), nullptr});
    cases.back().endo = Endomorphism::identity(cases.back().ring);
    cases.push_back({make_galois_field(2, 2), nullptr});
    cases.back().endo = Endomorphism::frobenius(cases.back().ring, 2);
    cases.push_back({make_product(z2, z2), nullptr});
    cases.back().endo = Endomorphism::swap(cases.back().ring);
    cases.push_back({make_poly_quotient(z2, {0, 0, 1}), nullptr});
    cases.back().endo = Endomorphism::constant_term(cases.back().ring);

    // exhaustive triples of degree <= 2 for the order-4 rings
    for (auto& c : cases) {
        const Ring& R = *c.ring;
        std::uint64_t T = R.order() * R.order() * R.order();
        auto decode = [&](std::uint64_t ix) {
            std::vector<std::uint64_t> cs(3);
            for (auto& d : cs) { d = ix % R.order(); ix /= R.order(); }
            return SkewPoly::from_indices(R, *c.endo, cs);
        };
        for (std::uint64_t i = 0; i < T; ++i) {
            SkewPoly p = decode(i);
            for (std::uint64_t j = 0; j < T; ++j) {
                SkewPoly q = decode(j);
                SkewPoly pq = skew_mul(p, q);
                for (std::uint64_t k = 0; k < T; k += 7) {  // stride keeps this under a second
                    SkewPoly r = decode(k);
                    CHECK(skew_mul(pq, r) == skew_mul(p, skew_mul(q, r)));
                    CHECK(skew_mul(p, skew_add(q, r)) == skew_add(pq, skew_mul(p, r)));
                }
            }
        }
    }

    // seeded random triples on the larger catalog rings
    std::vector<Case> big;
    big.push_back({make_matrix(2, z2), nullptr});
    big.back().endo = Endomorphism::identity(big.back().ring);
    big.push_back({make_upper_triangular(2, z2), nullptr});
    big.back().endo = Endomorphism::identity(big.back().ring);
    big.push_back({make_zn(6), nullptr});
    big.back().endo = Endomorphism::identity(big.back().ring);
    for (auto& c : big) {
        const Ring& R = *c.ring;
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 10000; ++trial) {
            auto rnd = [&] {
                std::vector<std::uint64_t> cs(1 + rng() % 3);
                for (auto& d : cs) d = rng() % R.order();
                return SkewPoly::from_indices(R, *c.endo, cs);
            };
            SkewPoly p = rnd(), q = rnd(), r = rnd();
            CHECK(skew_mul(skew_mul(p, q), r) == skew_mul(p, skew_mul(q, r)));
            CHECK(skew_mul(p, skew_add(q, r)) == skew_add(skew_mul(p, q), skew_mul(p, r)));
        }
    }
}

TEST_CASE("truncated products agree with reduced polynomial products") {
    auto dual = make_poly_quotient(make_zn(2), {0, 0, 1});
    auto ct = Endomorphism::constant_term(dual);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10000; ++trial) {
        std::size_t N = 2 + rng() % 3;
        std::vector<std::uint64_t> fc(N), gc(N);
        for (auto& c : fc) c = rng() % 4;
        for (auto& c : gc) c = rng() % 4;
        TruncSeries f = TruncSeries::from_indices(*dual, *ct, N, fc);
        TruncSeries g = TruncSeries::from_indices(*dual, *ct, N, gc);
        TruncSeries fg = trunc_mul(f, g);
        SkewPoly pf = SkewPoly::from_indices(*dual, *ct, fc);
        SkewPoly pg = SkewPoly::from_indices(*dual, *ct, gc);
        SkewPoly pq = skew_mul(pf, pg);
        for (std::size_t l = 0; l < N; ++l) CHECK(fg.coefficient(l) == pq.coefficient(l));
    }
}

TEST_CASE("idempotency of truncated series") {
    auto dual = make_poly_quotient(make_zn(2), {0, 0, 1});
    auto& q = dynamic_cast<const PolyQuotientRing&>(*dual);
    auto ct = Endomorphism::constant_term(dual);
    Element t = q.from_coeffs({0, 1});

    // constants with idempotent value stay idempotent at any truncation
    for (std::size_t N : {2, 3}) {
        TruncSeries one(*dual, *ct, N, {dual->one()});
        CHECK(is_idempotent_trunc(one).idempotent);
        TruncSeries zero(*dual, *ct, N, {});
        CHECK(is_idempotent_trunc(zero).idempotent);
    }

    // f = 1 + t x: the l=1 coefficient of f^2 is f0*f1 + f1*sigma(f0) = t + t = 0,
    // so f^2 = 1 != f
    TruncSeries f(*dual, *ct, 2, {dual->one(), t});
    TruncSeries one(*dual, *ct, 2, {dual->one()});
    CHECK(trunc_mul(f, f) == one);
    auto chk = is_idempotent_trunc(f);
    CHECK_FALSE(chk.idempotent);
    CHECK(chk.first_mismatch == 1);

    // exhaustive squaring of all 16 series at N=2: idempotents are exactly the
    // constant series with idempotent constant term, i.e. 0 and 1
    int count = 0;
    for (std::uint64_t a = 0; a < 4; ++a)
        for (std::uint64_t b = 0; b < 4; ++b) {
            TruncSeries s = TruncSeries::from_indices(*dual, *ct, 2, std::vector<std::uint64_t>{a, b});
            if (is_idempotent_trunc(s).idempotent) {
                ++count;
                CHECK(b == 0);
                CHECK((a == 0 || a == 1));
            }
        }
    CHECK(count == 2);

    // x is never idempotent
    auto w = make_bounded_poly(make_zn(2), 2);
    auto eval0 = Endomorphism::eval_at_zero(w);
    TruncSeries x(*w, *eval0, 3, {w->zero(), w->one()});
    auto r = is_idempotent_trunc(x);
    CHECK_FALSE(r.idempotent);
    CHECK(r.first_mismatch == 1);
}

TEST_CASE("skew products on the window stay exact under cancellation") {
    // coefficients whose pairwise products overflow the window may still sum
    // to an in-window value; the convolution must see the cancellation
    auto w = make_bounded_poly(make_zn(2), 2);
    auto& W = dynamic_cast<const BoundedPolyRing&>(*w);
    auto id = Endomorphism::identity(w);
    Element t = W.from_coeffs({0, 1});
    Element t2 = W.from_coeffs({0, 0, 1});

    // (t^2 + t x)(t + x): the x-coefficient is t^2*1 + t*t = 0 -> in window?
    // t^2 + t^3 x ... compute: c0 = t^2*t = t^3 overflows, so materializing throws
    SkewPoly p(*w, *id, {t2, t});
    SkewPoly q(*w, *id, {t, w->one()});
    CHECK_THROWS_AS(skew_mul(p, q), DegreeOverflow);
    CHECK_FALSE(is_zero_product(p, q));  // decided exactly, no throw

    // (t^2 + t^2 x)(t^2 + t^2 x) over Z2: every coefficient of the square is
    // t^4 + ... with the cross terms t^4 + t^4 = 0 at degree 1
    SkewPoly r(*w, *id, {t2, t2});
    CHECK_FALSE(is_zero_product(r, r));  // c0 = t^4 != 0, exact verdict without overflow
}

TEST_CASE("rendering matches the witness syntax") {
    WindowFixture F;
    SkewPoly p(*F.ring, *F.eval0, {F.ring->one(), F.t, F.W.from_coeffs({1, 1})});
    CHECK(p.render() == "1 + t*x + (t+1)*x^2");
    CHECK(SkewPoly::zero(*F.ring, *F.eval0).render() == "0");
    TruncSeries f(*F.ring, *F.eval0, 2, {F.ring->one(), F.t});
    CHECK(f.render() == "1 + t*x (mod x^2)");
}
