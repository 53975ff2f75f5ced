#pragma once

// The matrix A(s) of fundamental classes, its admissible permutations and
// its determinant computed two ways.

#include <map>
#include <optional>
#include <vector>

#include "altsnake/groth_ring.hpp"
#include "altsnake/snake.hpp"

namespace altsnake {

/// 1-based permutation in one-line form: perm[t - 1] = sigma(t).
using Permutation = std::vector<Index>;

class SnakeMatrix {
public:
    /// Builds A(s) from the row-indexed rule and checks it against the
    /// column-indexed rule; a disagreement throws OracleMismatch.
    explicit SnakeMatrix(const AlternatingSnake& s);

    Index size() const { return r_; }
    Index rank() const { return n_; }
    /// Entry (p, l), 1-based; empty when the entry is zero.
    const std::optional<Interval>& entry(Index p, Index l) const {
        return cells_[static_cast<std::size_t>((p - 1) * r_ + (l - 1))];
    }
    bool present(Index p, Index l) const { return entry(p, l).has_value(); }
    RingElement value(Index p, Index l) const;
    /// True when the admissible permutations are indexed by columns.
    bool columnIndexed() const { return columnIndexed_; }

    /// Rows of 'X' and '.' joined by spaces, one line per row.
    std::string pattern() const;

private:
    Index r_ = 0;
    Index n_ = 1;
    bool columnIndexed_ = true;
    std::vector<std::optional<Interval>> cells_;
};

/// Entry pattern from the row-indexed rule alone.
std::vector<std::vector<bool>> rowRulePattern(const AlternatingSnake& s);
/// Entry pattern from the column-indexed rule alone.
std::vector<std::vector<bool>> columnRulePattern(const AlternatingSnake& s);

inline SnakeMatrix buildMatrix(const AlternatingSnake& s) { return SnakeMatrix(s); }

/// Permutations with nonzero Leibniz product, in lexicographic order. For a
/// column-indexed matrix sigma(l) is the row used in column l.
std::vector<Permutation> sigmaSet(const SnakeMatrix& m);

/// +1 or -1.
int permutationSign(const Permutation& p);

/// sigma(s): ([i_sigma(1), j_1], ...) or ([i_1, j_sigma(1)], ...).
std::vector<Interval> applySigma(const AlternatingSnake& s, bool columnIndexed, const Permutation& sigma);

/// Cofactor expansion along the sparsest line, memoized on the remaining
/// row and column sets.
RingElement detLaplace(const SnakeMatrix& m);

/// Signed sum over sigmaSet.
RingElement detLeibniz(const SnakeMatrix& m);

struct Expansion {
    Index n = 1;
    std::map<LWeight, Integer> terms;
    std::size_t sigmaCount = 0;
};

/// Standard-module labels with summed signs. Refuses unstable snakes.
Expansion standardExpansion(const AlternatingSnake& s);

/// sum c [W(w)] as a ring element.
RingElement expansionClass(const Expansion& e);

/// The derived snake s_p of the first-column (or first-row) recursion.
ValidationResult derivedSnake(const AlternatingSnake& s, Index p);

/// A(s) with the first column and row p removed (first run left), or the
/// first row and column p removed (first run right).
std::vector<std::vector<std::optional<Interval>>> minorEntries(const SnakeMatrix& m, Index p);

/// Determinant of a matrix of optional intervals at rank n.
RingElement detOfEntries(const std::vector<std::vector<std::optional<Interval>>>& a, Index n);

/// det A_p(s) == det A(s_p). Needs s prime and stable and 1 <= p <= r_1.
bool minorCheck(const AlternatingSnake& s, Index p);

/// A_p(s) and A(s_p) agree entry for entry. Diagnostic only.
bool minorEntriesMatch(const AlternatingSnake& s, Index p);

/// det A(s) == det A(s(0, l)) det A(s(l, r)) at the first prime cut l.
bool splitCheck(const AlternatingSnake& s);

}  // namespace altsnake
