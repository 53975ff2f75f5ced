#include <doctest.h>

#include "altsnake/errors.hpp"
#include "altsnake/groth_ring.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace altsnake;
using namespace altsnake::testing;

namespace {

Monomial mono(std::initializer_list<std::pair<const Interval, Index>> g) { return Monomial(Monomial::Map(g)); }

RingElement randomElement(Rng& rng, Index n) {
    RingElement x(n);
    const Index terms = uniform(rng, 0, 3);
    for (Index t = 0; t < terms; ++t) {
        Monomial::Map g;
        const Index deg = uniform(rng, 0, 3);
        for (Index d = 0; d < deg; ++d) {
            const Index i = uniform(rng, -2, 2);
            g[{i, i + uniform(rng, 1, n)}] += 1;
        }
        x += RingElement::term(n, Monomial(g), Integer(uniform(rng, -3, 3)));
    }
    return x;
}

LWeight randomDominant(Rng& rng, Index n) {
    std::vector<std::pair<Interval, Integer>> gens;
    const Index count = uniform(rng, 0, 4);
    for (Index t = 0; t < count; ++t) {
        const Index i = uniform(rng, -3, 3);
        gens.push_back({{i, i + uniform(rng, 0, n + 1)}, Integer(uniform(rng, 1, 2))});
    }
    return LWeight::fromGenerators(gens, n);
}

}  // namespace

TEST_CASE("vClass conventions") {
    CHECK(vClass({0, 2}, 3) == RingElement::term(3, mono({{{0, 2}, 1}}), 1));
    CHECK(vClass({-1, 4}, 3).isZero());
    CHECK(vClass({1, 1}, 2) == RingElement::one(2));
    CHECK(vClass({1, 4}, 2) == RingElement::one(2));
    CHECK(vClass({3, 2}, 2).isZero());
}

TEST_CASE("weylClass") {
    const auto w = LWeight::generator({0, 2}, 2) * LWeight::generator({-1, 1}, 2);
    CHECK(weylClass(w) == RingElement::term(2, mono({{{0, 2}, 1}, {{-1, 1}, 1}}), 1));
    CHECK(weylClass(LWeight(4)) == RingElement::one(4));
    const auto withBoundary = w * LWeight::generator({5, 8}, 2);
    CHECK(weylClass(withBoundary) == weylClass(w));
    CHECK_THROWS_AS(weylClass(LWeight::generator({0, 1}, 2).inverse()), InvalidInput);
}

TEST_CASE("ring arithmetic") {
    const Index n = 3;
    CHECK((vClass({0, 2}, n) * RingElement::zero(n)).isZero());
    const auto p = vClass({0, 1}, n) * vClass({1, 2}, n);
    REQUIRE(p.terms().size() == 1);
    CHECK(p.terms().begin()->second == 1);
    CHECK((p - p).isZero());
    CHECK_THROWS_AS(vClass({0, 1}, 2) + vClass({0, 1}, 3), InvalidInput);
    CHECK_THROWS_AS(vClass({0, 1}, 2) * vClass({0, 1}, 3), InvalidInput);

    Rng rng(7);
    for (int t = 0; t < 300; ++t) {
        const auto a = randomElement(rng, n), b = randomElement(rng, n), c = randomElement(rng, n);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(a + neg(a) == RingElement::zero(n));
        CHECK(a * RingElement::one(n) == a);
    }
}

TEST_CASE("monomial order is graded") {
    const auto one = Monomial();
    const auto a = mono({{{0, 2}, 1}});
    const auto b = mono({{{-1, 1}, 1}, {{0, 2}, 1}});
    CHECK(one < a);
    CHECK(a < b);
    CHECK(mono({{{-1, 1}, 1}}) < a);
    CHECK(mono({{{0, 0}, 2}}).isOne());
}

TEST_CASE("dimEval") {
    CHECK(dimEval(vClass({0, 1}, 1)) == oracle::countPathsBrute(0, 1, 1));
    CHECK(dimEval(vClass({0, 1}, 1)) == 2);
    CHECK(dimEval(RingElement::one(5)) == 1);
    const auto w = LWeight::generator({0, 2}, 2) * LWeight::generator({-1, 1}, 2);
    CHECK(dimEval(weylClass(w)) == 9);

    Rng rng(11);
    for (int t = 0; t < 300; ++t) {
        const Index n = uniform(rng, 1, 6);
        const auto a = randomElement(rng, n), b = randomElement(rng, n);
        CHECK(dimEval(a * b) == dimEval(a) * dimEval(b));
        CHECK(dimEval(a + b) == dimEval(a) + dimEval(b));
    }
    // Generator values against path counting.
    for (Index n = 1; n <= 6; ++n)
        for (Index len = 1; len <= n; ++len) CHECK(dimEval(vClass({0, len}, n)) == oracle::countPathsBrute(0, len, n));
}

TEST_CASE("weylClass is multiplicative") {
    Rng rng(13);
    for (int t = 0; t < 300; ++t) {
        const Index n = uniform(rng, 1, 5);
        const auto a = randomDominant(rng, n), b = randomDominant(rng, n);
        CHECK(weylClass(a * b) == weylClass(a) * weylClass(b));
        CHECK(monomialWeight(weylClass(a).terms().begin()->first, n) == a);
    }
}

TEST_CASE("omega tilde") {
    CHECK(omegaTildeRing(vClass({0, 2}, 3)) == vClass({-2, 0}, 3));
    Rng rng(17);
    for (int t = 0; t < 300; ++t) {
        const Index n = uniform(rng, 1, 5);
        const auto a = randomElement(rng, n), b = randomElement(rng, n);
        CHECK(omegaTildeRing(omegaTildeRing(a)) == a);
        CHECK(omegaTildeRing(a * b) == omegaTildeRing(a) * omegaTildeRing(b));
        CHECK(omegaTildeRing(a + b) == omegaTildeRing(a) + omegaTildeRing(b));
        const auto w = randomDominant(rng, n);
        CHECK(omegaTildeRing(weylClass(w)) == weylClass(omegaInvolution(w)));
    }
}
