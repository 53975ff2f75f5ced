#include "altsnake/cat_o.hpp"

#include <algorithm>
#include <numeric>

#include "altsnake/errors.hpp"

namespace altsnake {

Permutation sigmaS(const AlternatingSnake& s) {
    Permutation p(static_cast<std::size_t>(s.size()));
    std::iota(p.begin(), p.end(), Index(1));
    std::stable_sort(p.begin(), p.end(), [&](Index a, Index b) {
        if (s.at(a).j != s.at(b).j) return s.at(a).j > s.at(b).j;
        return s.at(a).i < s.at(b).i;
    });
    return p;
}

LambdaMu lambdaMu(const AlternatingSnake& s) {
    LambdaMu out{{}, {}, 0};
    for (Index src : sigmaS(s)) {
        out.lambdaPlusRho.push_back(s.at(src).j);
        out.muPlusRho.push_back(s.at(src).i);
        out.ell += s.at(src).j - s.at(src).i;
    }
    return out;
}

bool isLargeRank(const AlternatingSnake& s) {
    Index minI = s.at(1).i, maxI = minI, minJ = s.at(1).j, maxJ = minJ;
    for (const auto& iv : s.intervals()) {
        minI = std::min(minI, iv.i);
        maxI = std::max(maxI, iv.i);
        minJ = std::min(minJ, iv.j);
        maxJ = std::max(maxJ, iv.j);
    }
    return maxJ - minI <= s.rank() + 1 && minJ - maxI >= 0;
}

KLTable klTable(const AlternatingSnake& s) {
    if (!isStable(s)) throw MathRefusal("Verma coefficients need a stable snake");
    if (!isLargeRank(s)) throw MathRefusal("rank too small: need max j - min i <= n+1 and min j >= max i");

    const LambdaMu lm = lambdaMu(s);
    const Permutation order = sigmaS(s);
    const Index r = s.size();
    const SnakeMatrix m(s);

    KLTable table{lm.lambdaPlusRho, lm.muPlusRho, {}};
    for (const auto& sigma : sigmaSet(m)) {
        // The interval of sigma(s) whose upper endpoint is j_l, as a lower endpoint.
        std::vector<Index> lowerAt(static_cast<std::size_t>(r + 1));
        for (Index t = 1; t <= r; ++t) {
            if (m.columnIndexed()) lowerAt[t] = s.at(sigma[t - 1]).i;
            else lowerAt[sigma[t - 1]] = s.at(t).i;
        }
        WeightR nu;
        for (Index t = 1; t <= r; ++t) nu.push_back(lowerAt[order[t - 1]]);
        // Equal entries of lambda + rho pair with their lowers in increasing order.
        for (std::size_t a = 0; a < nu.size();) {
            std::size_t b = a;
            while (b < nu.size() && lm.lambdaPlusRho[b] == lm.lambdaPlusRho[a]) ++b;
            std::sort(nu.begin() + static_cast<std::ptrdiff_t>(a), nu.begin() + static_cast<std::ptrdiff_t>(b));
            a = b;
        }
        table.rows[nu] += permutationSign(sigma);
    }
    std::erase_if(table.rows, [](const auto& kv) { return kv.second == 0; });
    return table;
}

bool dominantCheck(const WeightR& w) {
    for (std::size_t t = 1; t < w.size(); ++t)
        if (w[t - 1] < w[t]) return false;
    return true;
}

}  // namespace altsnake
