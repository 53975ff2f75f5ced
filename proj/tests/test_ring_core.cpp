#include <doctest.h>

#include "altsnake/errors.hpp"
#include "altsnake/ring_core.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace altsnake;
using altsnake::testing::Rng;
using altsnake::testing::uniform;

namespace {

LWeight W(std::initializer_list<std::tuple<Index, Index, long long>> gens, Index n) {
    std::vector<std::pair<Interval, Integer>> v;
    for (auto [i, j, e] : gens) v.emplace_back(Interval{i, j}, Integer(e));
    return LWeight::fromGenerators(v, n);
}

LWeight randomWeight(Rng& rng, Index n, int terms) {
    std::vector<std::pair<Interval, Integer>> v;
    for (int t = 0; t < terms; ++t) {
        const Index i = uniform(rng, -4, 4);
        v.emplace_back(Interval{i, i + uniform(rng, 0, n + 1)}, Integer(uniform(rng, -3, 3)));
    }
    return LWeight::fromGenerators(v, n);
}

}  // namespace

TEST_CASE("interval membership in I_n") {
    CHECK(intervalInIn({0, 4}, 4));
    CHECK_FALSE(intervalInIn({-1, 4}, 3));
    CHECK(intervalInIn({2, 2}, 1));
    CHECK_FALSE(intervalInIn({3, 2}, 5));
}

TEST_CASE("generators merge and drop boundary symbols") {
    CHECK(W({{0, 1, 1}, {0, 2, 1}}, 1) == W({{0, 1, 1}}, 1));
    CHECK(W({{0, 1, 1}, {0, 2, 1}}, 1).exponents().size() == 1);
    CHECK(W({{0, 1, 1}, {0, 1, -1}}, 3).isIdentity());
    CHECK(W({{0, 2, 2}}, 2).exponent({0, 2}) == 2);
    CHECK_THROWS_AS(W({{0, 5, 1}}, 3), InvalidInput);
    CHECK_THROWS_AS(W({{2, 1, 1}}, 3), InvalidInput);
    CHECK_THROWS_AS(LWeight(0), InvalidInput);
}

TEST_CASE("group law") {
    const LWeight w01 = LWeight::generator({0, 1}, 1);
    CHECK(mul(w01, w01) == W({{0, 1, 2}}, 1));
    CHECK(mul(w01, LWeight::generator({1, 2}, 1)) == W({{0, 1, 1}, {1, 2, 1}}, 1));
    CHECK_THROWS_AS(mul(w01, LWeight::generator({0, 1}, 2)), InvalidInput);

    Rng rng(11);
    for (int t = 0; t < 300; ++t) {
        const Index n = uniform(rng, 1, 6);
        const LWeight a = randomWeight(rng, n, 5), b = randomWeight(rng, n, 5), c = randomWeight(rng, n, 5);
        CHECK(mul(a, inv(a)).isIdentity());
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        // Normalizing an already normal weight changes nothing.
        std::vector<std::pair<Interval, Integer>> again(a.exponents().begin(), a.exponents().end());
        CHECK(LWeight::fromGenerators(again, n) == a);
        for (const auto& [iv, e] : a.exponents()) {
            CHECK(e != 0);
            CHECK_FALSE(isBoundary(iv, n));
        }
    }
}

TEST_CASE("l-roots") {
    CHECK(alphaRoot({0, 1}, 1) == W({{0, 1, 1}, {1, 2, 1}}, 1));
    CHECK(alphaRoot({0, 1}, 2) == W({{0, 1, 1}, {1, 2, 1}, {0, 2, -1}}, 2));
    CHECK(alphaRoot({1, 2}, 3) == W({{1, 2, 1}, {2, 3, 1}, {1, 3, -1}}, 3));
    CHECK_THROWS_AS(alphaRoot({0, 0}, 2), InvalidInput);
    CHECK_THROWS_AS(alphaRoot({0, 3}, 2), InvalidInput);

    Rng rng(12);
    for (int t = 0; t < 200; ++t) {
        const Index n = uniform(rng, 1, 8);
        const Index i = uniform(rng, -6, 6), j = i + uniform(rng, 1, n);
        CHECK(oracle::fromLibrary(alphaRoot({i, j}, n)) == oracle::alpha(i, j, n));
    }
}

TEST_CASE("gamma product") {
    CHECK(gammaProduct({0, 2}, {1, 3}, 3) == alphaRoot({0, 2}, 3));
    CHECK(gammaProduct({0, 1}, {1, 2}, 2) == W({{0, 1, 1}, {1, 2, 1}, {0, 2, -1}}, 2));
    CHECK(gammaProduct({-1, 1}, {0, 2}, 2) == W({{-1, 1, 1}, {0, 2, 1}, {0, 1, -1}}, 2));
    CHECK(gammaProduct({-1, 1}, {0, 2}, 2) == alphaRoot({-1, 1}, 2));
    CHECK_THROWS_AS(gammaProduct({0, 3}, {-5, -2}, 8), InvalidInput);
    CHECK_THROWS_AS(gammaProduct({1, 3}, {0, 2}, 3), InvalidInput);
}

TEST_CASE("gamma product equals the four-generator form on random connected pairs") {
    Rng rng(13);
    int checked = 0;
    while (checked < 1000) {
        const Index n = uniform(rng, 1, 8);
        const Interval a{uniform(rng, -8, 8), 0}, b{uniform(rng, -8, 8), 0};
        Interval x{a.i, a.i + uniform(rng, 0, n + 1)}, y{b.i, b.i + uniform(rng, 0, n + 1)};
        if (x.i > y.i) std::swap(x, y);
        if (!connectedPair(x, y, n) || x.i == y.i) continue;
        ++checked;
        const auto lib = oracle::fromLibrary(gammaProduct(x, y, n));
        CHECK(lib == oracle::fourGenerator({x.i, x.j}, {y.i, y.j}, n));
        oracle::Weight prod;
        for (Index p = x.i; p < y.i; ++p)
            for (Index q = x.j; q < y.j; ++q) prod = oracle::times(prod, oracle::alpha(p, q, n), n);
        CHECK(lib == prod);
    }
}

TEST_CASE("decomposition in the root monoid") {
    const auto a = decomposeInQPlus(alphaRoot({0, 1}, 2));
    REQUIRE(a);
    CHECK(a->coeffs == std::map<Interval, Integer>{{{0, 1}, 1}});

    const auto g = decomposeInQPlus(gammaProduct({-1, 1}, {1, 2}, 4));
    REQUIRE(g);
    CHECK(g->coeffs == std::map<Interval, Integer>{{{-1, 1}, 1}, {{0, 1}, 1}});

    CHECK_FALSE(decomposeInQPlus(LWeight::generator({0, 1}, 3)));
    CHECK(decomposeInQPlus(LWeight(3))->coeffs.empty());
}

TEST_CASE("decomposition recovers random root vectors") {
    Rng rng(14);
    for (int t = 0; t < 1000; ++t) {
        const Index n = uniform(rng, 1, 8);
        RootVector c{n, {}};
        const int terms = static_cast<int>(uniform(rng, 0, 6));
        for (int u = 0; u < terms; ++u) {
            const Index i = uniform(rng, -5, 5);
            c.coeffs[{i, i + uniform(rng, 1, n)}] += uniform(rng, 1, 3);
        }
        const auto back = decomposeInQPlus(rootProduct(c));
        REQUIRE(back);
        CHECK(*back == c);
        if (!c.coeffs.empty()) CHECK_FALSE(decomposeInQPlus(rootProduct(c).inverse()));
    }
}

TEST_CASE("partial order") {
    Rng rng(15);
    const LWeight x = randomWeight(rng, 4, 4);
    CHECK(leq(x, x));
    CHECK_FALSE(leq(LWeight::generator({0, 1}, 3), LWeight::generator({1, 2}, 3)));
    for (int t = 0; t < 300; ++t) {
        const Index n = uniform(rng, 1, 6);
        const LWeight a = randomWeight(rng, n, 3);
        RootVector c{n, {}};
        const Index i = uniform(rng, -3, 3);
        c.coeffs[{i, i + uniform(rng, 1, n)}] = uniform(rng, 0, 2);
        const LWeight b = a * rootProduct(c);
        CHECK(leq(a, b));
        CHECK(leq(a, b) == leq(omegaInvolution(a), omegaInvolution(b)));
        if (leq(b, a)) CHECK(a == b);
        const LWeight d = randomWeight(rng, n, 3);
        CHECK(leq(a, d) == leq(omegaInvolution(a), omegaInvolution(d)));
        if (leq(a, d) && leq(d, a)) CHECK(a == d);
    }
}

TEST_CASE("omega involution") {
    CHECK(omegaInvolution(LWeight::generator({0, 4}, 5)) == LWeight::generator({-4, 0}, 5));
    Rng rng(16);
    for (int t = 0; t < 200; ++t) {
        const Index n = uniform(rng, 1, 8);
        const LWeight a = randomWeight(rng, n, 5);
        CHECK(omegaInvolution(omegaInvolution(a)) == a);
        const Index i = uniform(rng, -5, 5);
        const auto img = decomposeInQPlus(omegaInvolution(alphaRoot({i, i + uniform(rng, 1, n)}, n)));
        REQUIRE(img);
        CHECK(img->coeffs.size() == 1);
    }
}
