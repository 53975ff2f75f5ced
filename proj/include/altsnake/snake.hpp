#pragma once

// Alternating snakes: an interval tuple together with a break vector, the
// predicates on them, sub-snakes, the two symmetries and prime factorization.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "altsnake/ring_core.hpp"

namespace altsnake {

/// Left: both endpoints strictly decreasing. Right: both strictly increasing.
enum class Direction { Left, Right };

const char* directionName(Direction d);

struct Diagnostic {
    std::string code;  // "malformed", "alt-1", "alt0", "alt1", "alt2"
    std::string message;
    std::vector<Index> witnesses;  // 1-based positions or break indices

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

class AlternatingSnake {
public:
    Index rank() const { return n_; }
    /// Number of intervals r.
    Index size() const { return static_cast<Index>(intervals_.size()); }
    /// Number of runs k.
    Index runCount() const { return static_cast<Index>(breaks_.size()) - 1; }

    const std::vector<Interval>& intervals() const { return intervals_; }
    /// r_0 = 1, ..., r_k = r. A single interval carries (1, 1).
    const std::vector<Index>& breaks() const { return breaks_; }
    /// Directions of runs 1..k (index 0 is run 1).
    const std::vector<Direction>& runs() const { return runs_; }

    /// 1-based access.
    const Interval& at(Index p) const { return intervals_.at(static_cast<std::size_t>(p - 1)); }
    /// r_m for 0 <= m <= k.
    Index breakAt(Index m) const { return breaks_.at(static_cast<std::size_t>(m)); }
    /// r_m with m < 0 read as 1 and m > k read as r.
    Index breakClamped(Index m) const;
    Direction run(Index m) const { return runs_.at(static_cast<std::size_t>(m - 1)); }

    /// w_s = product of the interval symbols.
    LWeight weight() const;

    friend bool operator==(const AlternatingSnake&, const AlternatingSnake&) = default;

private:
    friend struct SnakeBuilder;
    Index n_ = 1;
    std::vector<Interval> intervals_;
    std::vector<Index> breaks_;
    std::vector<Direction> runs_;
};

struct ValidationResult {
    std::optional<AlternatingSnake> snake;
    std::vector<Diagnostic> diagnostics;

    bool valid() const { return snake.has_value(); }
};

/// Checks every condition independently and reports each violation. A break
/// vector (1) for a single interval is read as (1, 1).
ValidationResult validate(const std::vector<Interval>& intervals, const std::vector<Index>& breaks, Index n);

/// validate, throwing InvalidInput carrying the first diagnostic on failure.
AlternatingSnake makeSnake(const std::vector<Interval>& intervals, const std::vector<Index>& breaks, Index n);

/// Same intervals and breaks at a larger rank.
AlternatingSnake withRank(const AlternatingSnake& s, Index n);

/// Intervals p+1, ..., p' with the induced break vector.
AlternatingSnake subSnake(const AlternatingSnake& s, Index p, Index pPrime);

/// Reversed interval list with breaks (1, r - r_{k-1} + 1, ..., r - r_1 + 1, r).
AlternatingSnake reverse(const AlternatingSnake& s);

/// [i, j] -> [-j, -i] on every interval, same breaks.
AlternatingSnake omegaSnake(const AlternatingSnake& s);

/// Interval lists of the parts, concatenated.
std::vector<Interval> concatIntervals(const std::vector<AlternatingSnake>& parts);

bool isConnectedSnake(const AlternatingSnake& s);
bool isStable(const AlternatingSnake& s);
bool isPrime(const AlternatingSnake& s);

struct PrimeDecomposition {
    std::vector<AlternatingSnake> factors;
    /// Cut after position p (1-based, original indexing), increasing.
    std::vector<Index> cuts;
};

PrimeDecomposition primeDecomposition(const AlternatingSnake& s);
std::vector<AlternatingSnake> primeDecompose(const AlternatingSnake& s);

/// No cut falls in [l, l' - 1].
bool containedInPrimeFactor(const AlternatingSnake& s, Index l, Index lPrime);

struct TauResult {
    std::vector<Interval> intervals;  // not an alternating snake in general
    LWeight gamma;
};

/// Swaps the upper endpoints of positions p and p+1.
TauResult tauP(const AlternatingSnake& s, Index p);

/// Product of the symbols of a raw interval tuple.
LWeight tupleWeight(const std::vector<Interval>& intervals, Index n);

/// ([mu_1, lambda_2], [mu_3, lambda_1], [mu_2, lambda_4], ...), indices past r
/// clamped to r, breaks (1, ..., r).
AlternatingSnake genMuLambdaSnake(const std::vector<Index>& mu, const std::vector<Index>& lambda, Index n);

/// One ordering requirement x_a > x_b (strict) or x_a >= x_b, 1-based positions.
struct ChainLink {
    Index a = 0;
    Index b = 0;
    bool strict = true;
};

struct ExmoreChains {
    std::vector<ChainLink> i;
    std::vector<ChainLink> j;
};

/// The two inequality chains imposed on the endpoint vectors by a break
/// vector of the family.
ExmoreChains exmoreChains(const std::vector<Index>& breaks);

struct ExmoreResult {
    AlternatingSnake snake;
    Index nMin;
};

/// Snake ([i_1, j_1], ..., [i_r, j_r]) at the least admissible rank.
ExmoreResult genExmoreFamily(const std::vector<Index>& breaks, const std::vector<Index>& ivec,
                             const std::vector<Index>& jvec);

}  // namespace altsnake
