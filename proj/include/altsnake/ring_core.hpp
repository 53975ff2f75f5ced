#pragma once

// The l-weight group: free abelian group on interval symbols w_{i,j}, with the
// boundary symbols (length 0 and length n+1) identified with the unit, the
// l-roots alpha_{i,j}, the monoid they generate and the induced partial order.

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "altsnake/integer.hpp"

namespace altsnake {

struct Interval {
    Index i = 0;
    Index j = 0;

    Index length() const { return j - i; }

    friend auto operator<=>(const Interval&, const Interval&) = default;
    friend bool operator==(const Interval&, const Interval&) = default;
};

std::ostream& operator<<(std::ostream& os, const Interval& iv);

/// 0 <= j - i <= n + 1.
bool intervalInIn(const Interval& iv, Index n);

/// Length 0 or n + 1: the symbol is the identity of the group.
inline bool isBoundary(const Interval& iv, Index n) { return iv.length() == 0 || iv.length() == n + 1; }

/// [i, j] -> [-j, -i].
inline Interval omega(const Interval& iv) { return {-iv.j, -iv.i}; }

/// Strict interleaving i_a < i_b <= j_a < j_b in one of the two orders.
bool overlap(const Interval& a, const Interval& b);

/// Overlap, and both crossed intervals [a.i, b.j], [b.i, a.j] lie in I_n.
bool connectedPair(const Interval& a, const Interval& b, Index n);

/// An element of the l-weight group at rank n. Always normalized: no zero
/// exponents and no boundary symbols are stored.
class LWeight {
public:
    using Map = std::map<Interval, Integer>;

    explicit LWeight(Index n);

    /// Merges the generators, erasing boundary symbols and zero exponents.
    /// Throws InvalidInput on a non-positive rank or an interval outside I_n.
    static LWeight fromGenerators(const std::vector<std::pair<Interval, Integer>>& gens, Index n);

    /// The single symbol w_{i,j} (identity if boundary).
    static LWeight generator(const Interval& iv, Index n);

    Index rank() const { return n_; }
    const Map& exponents() const { return exps_; }
    bool isIdentity() const { return exps_.empty(); }

    /// Exponent of w_{i,j}; zero for boundary or absent symbols.
    Integer exponent(const Interval& iv) const;

    /// All exponents nonnegative, i.e. an element of the monoid I_n^+.
    bool isDominant() const;

    LWeight operator*(const LWeight& other) const;
    LWeight& operator*=(const LWeight& other);
    LWeight inverse() const;
    LWeight pow(const Integer& e) const;

    friend bool operator==(const LWeight&, const LWeight&) = default;
    /// Total order used for canonical output: by rank, then the sorted
    /// generator list.
    friend bool operator<(const LWeight& a, const LWeight& b);

private:
    void accumulate(const Interval& iv, const Integer& e);

    Index n_;
    Map exps_;
};

std::ostream& operator<<(std::ostream& os, const LWeight& w);

inline LWeight mul(const LWeight& a, const LWeight& b) { return a * b; }
inline LWeight inv(const LWeight& a) { return a.inverse(); }

/// Nonnegative combination of l-roots, keyed by the root interval.
struct RootVector {
    Index n = 1;
    std::map<Interval, Integer> coeffs;

    friend bool operator==(const RootVector&, const RootVector&) = default;
};

/// alpha_{i,j} = w_{i,j} w_{i+1,j+1} (w_{i+1,j} w_{i,j+1})^{-1}, 0 < j - i < n + 1.
LWeight alphaRoot(const Interval& iv, Index n);

/// prod_{alpha} alpha^{c} for a root vector.
LWeight rootProduct(const RootVector& c);

/// For a connected pair with a.i < b.i, the product of alpha_{p,q} over
/// a.i <= p < b.i, a.j <= q < b.j.
LWeight gammaProduct(const Interval& a, const Interval& b, Index n);

/// w_{a} w_{b} (w_{a.i,b.j} w_{b.i,a.j})^{-1}.
LWeight crossRatio(const Interval& a, const Interval& b, Index n);

/// Writes g as a nonnegative combination of l-roots when possible. The
/// monoid is free, so the answer is unique.
std::optional<RootVector> decomposeInQPlus(const LWeight& g);

/// a <= b iff b a^{-1} lies in the root monoid.
bool leq(const LWeight& a, const LWeight& b);

/// Group automorphism w_{i,j} -> w_{-j,-i}.
LWeight omegaInvolution(const LWeight& a);

}  // namespace altsnake
