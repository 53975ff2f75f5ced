#pragma once

// Weights for gl_r read off a snake, and the coefficients of Verma classes
// in an irreducible class obtained from the determinant expansion. All
// weights are stored shifted by rho, so every coordinate is an integer.

#include <map>
#include <vector>

#include "altsnake/detform.hpp"

namespace altsnake {

using WeightR = std::vector<Index>;

/// Sorts positions by j decreasing, ties by i increasing. One-line form:
/// result[t - 1] is the source position placed at t.
Permutation sigmaS(const AlternatingSnake& s);

struct LambdaMu {
    WeightR lambdaPlusRho;
    WeightR muPlusRho;
    Integer ell;
};

LambdaMu lambdaMu(const AlternatingSnake& s);

struct KLTable {
    WeightR lambdaPlusRho;
    WeightR muPlusRho;
    std::map<WeightR, Integer> rows;  // nu + rho -> c_{mu, nu}
};

/// max j - min i <= n + 1 and min j - max i >= 0.
bool isLargeRank(const AlternatingSnake& s);

/// Refuses unstable snakes and ranks that are too small.
KLTable klTable(const AlternatingSnake& s);

/// Weakly decreasing coordinates.
bool dominantCheck(const WeightR& w);

}  // namespace altsnake
