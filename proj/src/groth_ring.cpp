#include "altsnake/groth_ring.hpp"

#include <algorithm>

#include "altsnake/errors.hpp"

namespace altsnake {

Monomial::Monomial(Map gens) : gens_(std::move(gens)) {
    for (auto it = gens_.begin(); it != gens_.end();) {
        if (it->second < 0) throw InvalidInput("negative multiplicity in a monomial");
        if (it->second == 0 || it->first.length() == 0) {
            it = gens_.erase(it);
        } else {
            degree_ += it->second;
            ++it;
        }
    }
}

Monomial Monomial::operator*(const Monomial& other) const {
    Map g = gens_;
    for (const auto& [iv, e] : other.gens_) g[iv] += e;
    return Monomial(std::move(g));
}

bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return std::lexicographical_compare(a.gens_.begin(), a.gens_.end(), b.gens_.begin(), b.gens_.end());
}

RingElement::RingElement(Index n) : n_(n) {
    if (n < 1) throw InvalidInput("rank must be positive");
}

RingElement RingElement::one(Index n) { return term(n, Monomial(), 1); }

RingElement RingElement::term(Index n, const Monomial& m, const Integer& c) {
    RingElement x(n);
    x.addTerm(m, c);
    return x;
}

Integer RingElement::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

void RingElement::addTerm(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

namespace {
void requireSameRank(const RingElement& a, const RingElement& b) {
    if (a.rank() != b.rank())
        throw InvalidInput("rank mismatch: " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
}
}  // namespace

RingElement& RingElement::operator+=(const RingElement& o) {
    requireSameRank(*this, o);
    for (const auto& [m, c] : o.terms_) addTerm(m, c);
    return *this;
}

RingElement RingElement::operator+(const RingElement& o) const {
    RingElement out = *this;
    out += o;
    return out;
}

RingElement RingElement::operator-() const {
    RingElement out(n_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

RingElement RingElement::operator-(const RingElement& o) const { return *this + (-o); }

RingElement RingElement::operator*(const RingElement& o) const {
    requireSameRank(*this, o);
    RingElement out(n_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) out.addTerm(m1 * m2, c1 * c2);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) {
    if (m.isOne()) return os << '1';
    bool first = true;
    for (const auto& [iv, e] : m.gens()) {
        if (!first) os << '*';
        first = false;
        os << 'V' << iv;
        if (e != 1) os << '^' << e;
    }
    return os;
}

std::ostream& operator<<(std::ostream& os, const RingElement& x) {
    if (x.isZero()) return os << '0';
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        if (c < 0) os << (first ? "-" : " - ");
        else if (!first) os << " + ";
        first = false;
        const Integer a = abs(c);
        if (a != 1 || m.isOne()) {
            os << a;
            if (!m.isOne()) os << '*';
        }
        if (!m.isOne()) os << m;
    }
    return os;
}

RingElement vClass(const Interval& iv, Index n) {
    if (!intervalInIn(iv, n)) return RingElement::zero(n);
    if (isBoundary(iv, n)) return RingElement::one(n);
    return RingElement::term(n, Monomial({{iv, 1}}), 1);
}

RingElement weylClass(const LWeight& w) {
    Monomial::Map gens;
    for (const auto& [iv, e] : w.exponents()) {
        if (e < 0) throw InvalidInput("Weyl class needs a dominant weight");
        auto v = toInt64(e);
        if (!v) throw InvalidInput("multiplicity too large");
        gens.emplace(iv, *v);
    }
    return RingElement::term(w.rank(), Monomial(std::move(gens)), 1);
}

LWeight monomialWeight(const Monomial& m, Index n) {
    std::vector<std::pair<Interval, Integer>> gens;
    for (const auto& [iv, e] : m.gens()) gens.emplace_back(iv, Integer(e));
    return LWeight::fromGenerators(gens, n);
}

Integer dimEval(const RingElement& x) {
    Integer total = 0;
    for (const auto& [m, c] : x.terms()) {
        Integer v = c;
        for (const auto& [iv, e] : m.gens()) v *= boost::multiprecision::pow(binomial(x.rank() + 1, iv.length()), static_cast<unsigned>(e));
        total += v;
    }
    return total;
}

RingElement omegaTildeRing(const RingElement& x) {
    RingElement out(x.rank());
    for (const auto& [m, c] : x.terms()) {
        Monomial::Map g;
        for (const auto& [iv, e] : m.gens()) g.emplace(omega(iv), e);
        out += RingElement::term(x.rank(), Monomial(std::move(g)), c);
    }
    return out;
}

}  // namespace altsnake
