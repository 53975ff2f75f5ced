#include "altsnake/ring_core.hpp"

#include <algorithm>
#include <sstream>

#include "altsnake/errors.hpp"

namespace altsnake {

namespace {

void requireRank(Index n) {
    if (n < 1) throw InvalidInput("rank must be positive, got " + std::to_string(n));
}

std::string show(const Interval& iv) {
    std::ostringstream os;
    os << iv;
    return os.str();
}

void requireSameRank(const LWeight& a, const LWeight& b) {
    if (a.rank() != b.rank())
        throw InvalidInput("rank mismatch: " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
}

bool isRootInterval(const Interval& iv, Index n) { return iv.length() > 0 && iv.length() < n + 1; }

}  // namespace

std::ostream& operator<<(std::ostream& os, const Interval& iv) { return os << '[' << iv.i << ',' << iv.j << ']'; }

bool intervalInIn(const Interval& iv, Index n) { return iv.length() >= 0 && iv.length() <= n + 1; }

bool overlap(const Interval& a, const Interval& b) {
    auto oriented = [](const Interval& x, const Interval& y) { return x.i < y.i && y.i <= x.j && x.j < y.j; };
    return oriented(a, b) || oriented(b, a);
}

bool connectedPair(const Interval& a, const Interval& b, Index n) {
    return overlap(a, b) && intervalInIn({a.i, b.j}, n) && intervalInIn({b.i, a.j}, n);
}

LWeight::LWeight(Index n) : n_(n) { requireRank(n); }

void LWeight::accumulate(const Interval& iv, const Integer& e) {
    if (e == 0 || isBoundary(iv, n_)) return;
    auto [it, inserted] = exps_.try_emplace(iv, e);
    if (!inserted) {
        it->second += e;
        if (it->second == 0) exps_.erase(it);
    }
}

LWeight LWeight::fromGenerators(const std::vector<std::pair<Interval, Integer>>& gens, Index n) {
    LWeight w(n);
    for (const auto& [iv, e] : gens) {
        if (!intervalInIn(iv, n)) throw InvalidInput("interval " + show(iv) + " not in I_" + std::to_string(n));
        w.accumulate(iv, e);
    }
    return w;
}

LWeight LWeight::generator(const Interval& iv, Index n) { return fromGenerators({{iv, Integer(1)}}, n); }

Integer LWeight::exponent(const Interval& iv) const {
    auto it = exps_.find(iv);
    return it == exps_.end() ? Integer(0) : it->second;
}

bool LWeight::isDominant() const {
    return std::all_of(exps_.begin(), exps_.end(), [](const auto& kv) { return kv.second > 0; });
}

LWeight LWeight::operator*(const LWeight& other) const {
    LWeight out = *this;
    out *= other;
    return out;
}

LWeight& LWeight::operator*=(const LWeight& other) {
    requireSameRank(*this, other);
    for (const auto& [iv, e] : other.exps_) accumulate(iv, e);
    return *this;
}

LWeight LWeight::inverse() const {
    LWeight out(n_);
    for (const auto& [iv, e] : exps_) out.exps_.emplace(iv, -e);
    return out;
}

LWeight LWeight::pow(const Integer& e) const {
    LWeight out(n_);
    if (e == 0) return out;
    for (const auto& [iv, x] : exps_) out.exps_.emplace(iv, x * e);
    return out;
}

bool operator<(const LWeight& a, const LWeight& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return std::lexicographical_compare(a.exps_.begin(), a.exps_.end(), b.exps_.begin(), b.exps_.end());
}

std::ostream& operator<<(std::ostream& os, const LWeight& w) {
    if (w.isIdentity()) return os << '1';
    bool first = true;
    for (const auto& [iv, e] : w.exponents()) {
        if (!first) os << ' ';
        first = false;
        os << 'w' << iv;
        if (e != 1) os << '^' << e;
    }
    return os;
}

LWeight alphaRoot(const Interval& iv, Index n) {
    requireRank(n);
    if (!isRootInterval(iv, n)) throw InvalidInput("no l-root at " + show(iv) + " for n=" + std::to_string(n));
    return LWeight::fromGenerators({{iv, Integer(1)},
                                    {{iv.i + 1, iv.j + 1}, Integer(1)},
                                    {{iv.i + 1, iv.j}, Integer(-1)},
                                    {{iv.i, iv.j + 1}, Integer(-1)}},
                                   n);
}

LWeight rootProduct(const RootVector& c) {
    LWeight out(c.n);
    for (const auto& [iv, e] : c.coeffs) out *= alphaRoot(iv, c.n).pow(e);
    return out;
}

LWeight gammaProduct(const Interval& a, const Interval& b, Index n) {
    requireRank(n);
    if (!connectedPair(a, b, n) || a.i >= b.i)
        throw InvalidInput("gamma needs a connected pair with a.i < b.i, got " + show(a) + ", " + show(b));
    LWeight out(n);
    for (Index p = a.i; p < b.i; ++p)
        for (Index q = a.j; q < b.j; ++q) out *= alphaRoot({p, q}, n);
    return out;
}

LWeight crossRatio(const Interval& a, const Interval& b, Index n) {
    return LWeight::fromGenerators(
        {{a, Integer(1)}, {b, Integer(1)}, {{a.i, b.j}, Integer(-1)}, {{b.i, a.j}, Integer(-1)}}, n);
}

std::optional<RootVector> decomposeInQPlus(const LWeight& g) {
    const Index n = g.rank();
    RootVector c{n, {}};
    if (g.isIdentity()) return c;

    Index minA = g.exponents().begin()->first.i;
    Index maxA = minA;
    for (const auto& kv : g.exponents()) maxA = std::max(maxA, kv.first.i);

    // Exponent of w_{a,b} in prod alpha^c is c(a,b) + c(a-1,b-1) - c(a-1,b) - c(a,b-1).
    auto at = [&](Index a, Index b) -> Integer {
        auto it = c.coeffs.find({a, b});
        return it == c.coeffs.end() ? Integer(0) : it->second;
    };
    for (Index a = minA; a < maxA; ++a) {
        for (Index b = a + 1; b <= a + n; ++b) {
            Integer v = g.exponent({a, b}) - at(a - 1, b - 1) + at(a - 1, b) + at(a, b - 1);
            if (v < 0) return std::nullopt;
            if (v != 0) c.coeffs.emplace(Interval{a, b}, v);
        }
    }
    if (rootProduct(c) != g) return std::nullopt;
    return c;
}

bool leq(const LWeight& a, const LWeight& b) {
    requireSameRank(a, b);
    return decomposeInQPlus(b * a.inverse()).has_value();
}

LWeight omegaInvolution(const LWeight& a) {
    std::vector<std::pair<Interval, Integer>> gens;
    for (const auto& [iv, e] : a.exponents()) gens.emplace_back(omega(iv), e);
    return LWeight::fromGenerators(gens, a.rank());
}

}  // namespace altsnake
