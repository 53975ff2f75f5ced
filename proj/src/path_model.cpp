#include "altsnake/path_model.hpp"

#include "altsnake/errors.hpp"

#include <map>

namespace altsnake {

std::vector<Path> enumPaths(const Interval& iv, Index n) {
    if (n < 1 || !intervalInIn(iv, n)) throw InvalidInput("path model needs an interval in I_n");
    std::vector<Path> out;
    const Index target = n + 1 + 2 * iv.i;
    std::vector<Index> g{2 * iv.j};
    auto rec = [&](auto&& self, Index r) -> void {
        if (r == n + 1) {
            if (g.back() == target) out.push_back({iv, n, g});
            return;
        }
        for (Index step : {-1, 1}) {
            const Index next = g.back() + step;
            const Index left = n + 1 - (r + 1);
            if (next - target > left || target - next > left) continue;
            g.push_back(next);
            self(self, r + 1);
            g.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

CornerSet corners(const Path& g) {
    CornerSet c;
    for (Index r = 1; r <= g.n; ++r) {
        const Index v = g.at(r), a = g.at(r - 1), b = g.at(r + 1);
        const Interval corner{(v - r) / 2, (v + r) / 2};
        if (a == v + 1 && b == v + 1) c.plus.push_back(corner);
        if (a == v - 1 && b == v - 1) c.minus.push_back(corner);
    }
    return c;
}

LWeight pathWeight(const Path& g) {
    const CornerSet c = corners(g);
    std::vector<std::pair<Interval, Integer>> gens;
    for (const auto& iv : c.plus) gens.emplace_back(iv, Integer(1));
    for (const auto& iv : c.minus) gens.emplace_back(iv, Integer(-1));
    return LWeight::fromGenerators(gens, g.n);
}

AlternatingSnake leftModel(const AlternatingSnake& s) {
    if (s.runCount() != 1) throw InvalidInput("the path model covers single-run snakes only");
    return s.run(1) == Direction::Left ? s : reverse(s);
}

namespace {

bool dominates(const Path& hi, const Path& lo) {
    for (std::size_t m = 0; m < hi.values.size(); ++m)
        if (hi.values[m] <= lo.values[m]) return false;
    return true;
}

std::vector<std::vector<Path>> pathPools(const AlternatingSnake& t) {
    std::vector<std::vector<Path>> pools;
    for (const auto& iv : t.intervals()) pools.push_back(enumPaths(iv, t.rank()));
    return pools;
}

/// next[d][a] lists the paths of pool d+1 lying strictly below path a of pool d.
std::vector<std::vector<std::vector<std::size_t>>> belowLists(const std::vector<std::vector<Path>>& pools) {
    std::vector<std::vector<std::vector<std::size_t>>> next(pools.size());
    for (std::size_t d = 0; d + 1 < pools.size(); ++d) {
        next[d].resize(pools[d].size());
        for (std::size_t a = 0; a < pools[d].size(); ++a)
            for (std::size_t b = 0; b < pools[d + 1].size(); ++b)
                if (dominates(pools[d][a], pools[d + 1][b])) next[d][a].push_back(b);
    }
    return next;
}

/// Depth-first walk over index tuples; enter(d, idx) may veto a branch.
template <class Enter, class Leave, class Leaf>
void walk(const std::vector<std::vector<Path>>& pools, Enter enter, Leave leave, Leaf leaf) {
    const auto next = belowLists(pools);
    auto rec = [&](auto&& self, std::size_t d, std::size_t idx) -> void {
        enter(d, idx);
        if (d + 1 == pools.size()) leaf();
        else
            for (std::size_t b : next[d][idx]) self(self, d + 1, b);
        leave(d);
    };
    for (std::size_t a = 0; a < pools[0].size(); ++a) rec(rec, 0, a);
}

}  // namespace

void forEachNonCrossingTuple(const AlternatingSnake& s, const std::function<void(const std::vector<const Path*>&)>& visit) {
    const auto pools = pathPools(leftModel(s));
    std::vector<const Path*> cur;
    walk(
        pools, [&](std::size_t d, std::size_t idx) { cur.push_back(&pools[d][idx]); }, [&](std::size_t) { cur.pop_back(); },
        [&] { visit(cur); });
}

std::vector<std::vector<Path>> nonCrossingTuples(const AlternatingSnake& s) {
    std::vector<std::vector<Path>> out;
    forEachNonCrossingTuple(s, [&](const std::vector<const Path*>& tuple) {
        std::vector<Path> t;
        for (const Path* g : tuple) t.push_back(*g);
        out.push_back(std::move(t));
    });
    return out;
}

std::set<LWeight> ellWeightSet(const AlternatingSnake& s) {
    const auto pools = pathPools(leftModel(s));
    // Corner intervals get dense slots so tuple products are vector updates.
    std::map<Interval, std::size_t> slot;
    std::vector<std::vector<std::vector<std::pair<std::size_t, int>>>> delta(pools.size());
    for (std::size_t d = 0; d < pools.size(); ++d)
        for (const auto& g : pools[d]) {
            const CornerSet c = corners(g);
            std::vector<std::pair<std::size_t, int>> dv;
            for (const auto& iv : c.plus) dv.emplace_back(slot.try_emplace(iv, slot.size()).first->second, 1);
            for (const auto& iv : c.minus) dv.emplace_back(slot.try_emplace(iv, slot.size()).first->second, -1);
            delta[d].push_back(std::move(dv));
        }
    std::vector<Interval> byslot(slot.size());
    for (const auto& [iv, k] : slot) byslot[k] = iv;

    std::set<std::vector<int>> seen;
    std::vector<int> cur(slot.size(), 0);
    std::vector<std::size_t> chosen;
    walk(
        pools,
        [&](std::size_t d, std::size_t idx) {
            chosen.push_back(idx);
            for (const auto& [k, e] : delta[d][idx]) cur[k] += e;
        },
        [&](std::size_t d) {
            for (const auto& [k, e] : delta[d][chosen.back()]) cur[k] -= e;
            chosen.pop_back();
        },
        [&] { seen.insert(cur); });

    std::set<LWeight> out;
    for (const auto& v : seen) {
        std::vector<std::pair<Interval, Integer>> gens;
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k] != 0) gens.emplace_back(byslot[k], Integer(v[k]));
        out.insert(LWeight::fromGenerators(gens, s.rank()));
    }
    return out;
}

std::set<LWeight> dominantWeights(const AlternatingSnake& s) {
    std::set<LWeight> out;
    for (const auto& w : ellWeightSet(s))
        if (w.isDominant()) out.insert(w);
    return out;
}

Integer snakeDim(const AlternatingSnake& s) {
    const auto pools = pathPools(leftModel(s));
    // Tuples counted by dynamic programming over the last path chosen.
    std::vector<Integer> ways(pools.back().size(), Integer(1));
    const auto next = belowLists(pools);
    for (std::size_t d = pools.size() - 1; d-- > 0;) {
        std::vector<Integer> up(pools[d].size(), Integer(0));
        for (std::size_t a = 0; a < pools[d].size(); ++a)
            for (std::size_t b : next[d][a]) up[a] += ways[b];
        ways = std::move(up);
    }
    Integer total = 0;
    for (const auto& w : ways) total += w;
    return total;
}

}  // namespace altsnake
