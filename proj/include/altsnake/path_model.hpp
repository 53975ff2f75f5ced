#pragma once

// Lattice paths on {0, ..., n+1} with unit steps, their corners and
// l-weights, and non-crossing tuples for single-run snakes.

#include <functional>
#include <set>
#include <vector>

#include "altsnake/snake.hpp"

namespace altsnake {

struct Path {
    Interval source;
    Index n = 1;
    std::vector<Index> values;  // g(0), ..., g(n+1)

    Index at(Index r) const { return values[static_cast<std::size_t>(r)]; }
    friend bool operator==(const Path&, const Path&) = default;
};

struct CornerSet {
    std::vector<Interval> plus;   // local minima
    std::vector<Interval> minus;  // local maxima
};

/// All paths with g(0) = 2j and g(n+1) = n+1+2i, in lexicographic order of
/// their value vectors.
std::vector<Path> enumPaths(const Interval& iv, Index n);

CornerSet corners(const Path& g);

/// Product of plus corners over product of minus corners.
LWeight pathWeight(const Path& g);

/// The single-run snake in the left direction whose tuples model s: s itself,
/// or its reversal when the run goes right. Throws InvalidInput for k > 1.
AlternatingSnake leftModel(const AlternatingSnake& s);

/// Calls visit on every tuple with g_s(m) > g_{s+1}(m) pointwise.
void forEachNonCrossingTuple(const AlternatingSnake& s, const std::function<void(const std::vector<const Path*>&)>& visit);

std::vector<std::vector<Path>> nonCrossingTuples(const AlternatingSnake& s);

std::set<LWeight> ellWeightSet(const AlternatingSnake& s);
std::set<LWeight> dominantWeights(const AlternatingSnake& s);

/// Number of non-crossing tuples.
Integer snakeDim(const AlternatingSnake& s);

}  // namespace altsnake
