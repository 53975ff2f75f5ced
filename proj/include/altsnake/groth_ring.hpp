#pragma once

// Integer polynomials in commuting symbols [V_{i,j}]: the classes of the
// fundamental modules and their products.

#include <map>
#include <ostream>

#include "altsnake/ring_core.hpp"

namespace altsnake {

/// Interval -> positive multiplicity. Ordered graded-lex: total degree first,
/// then the sorted generator list.
class Monomial {
public:
    using Map = std::map<Interval, Index>;

    Monomial() = default;
    explicit Monomial(Map gens);

    const Map& gens() const { return gens_; }
    Index degree() const { return degree_; }
    bool isOne() const { return gens_.empty(); }

    Monomial operator*(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend bool operator<(const Monomial& a, const Monomial& b);

private:
    Map gens_;
    Index degree_ = 0;
};

class RingElement {
public:
    using Map = std::map<Monomial, Integer>;

    explicit RingElement(Index n);

    static RingElement zero(Index n) { return RingElement(n); }
    static RingElement one(Index n);
    static RingElement term(Index n, const Monomial& m, const Integer& c);

    Index rank() const { return n_; }
    const Map& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    Integer coefficient(const Monomial& m) const;

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator-() const;
    RingElement operator*(const RingElement& o) const;
    RingElement& operator+=(const RingElement& o);

    friend bool operator==(const RingElement&, const RingElement&) = default;

private:
    void addTerm(const Monomial& m, const Integer& c);

    Index n_;
    Map terms_;
};

std::ostream& operator<<(std::ostream& os, const Monomial& m);
std::ostream& operator<<(std::ostream& os, const RingElement& x);

inline RingElement add(const RingElement& a, const RingElement& b) { return a + b; }
inline RingElement mul(const RingElement& a, const RingElement& b) { return a * b; }
inline RingElement neg(const RingElement& a) { return -a; }

/// Zero outside I_n, one on the boundary, the degree-one symbol otherwise.
RingElement vClass(const Interval& iv, Index n);

/// Product of vClass over the generators of w; w must be dominant.
RingElement weylClass(const LWeight& w);

/// The l-weight labelling a monomial.
LWeight monomialWeight(const Monomial& m, Index n);

/// Substitutes binomial(n + 1, j - i) for [V_{i,j}].
Integer dimEval(const RingElement& x);

/// [V_{i,j}] -> [V_{-j,-i}].
RingElement omegaTildeRing(const RingElement& x);

}  // namespace altsnake
