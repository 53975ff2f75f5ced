#include "altsnake/detform.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <unordered_map>

#include "altsnake/errors.hpp"

namespace altsnake {

namespace {

using Grid = std::vector<std::vector<std::optional<Interval>>>;

// connected[p] is true when positions p and p+1 form a connected pair.
std::vector<bool> adjacentConnected(const AlternatingSnake& s) {
    std::vector<bool> c(static_cast<std::size_t>(s.size() + 1), true);
    for (Index p = 1; p < s.size(); ++p) c[p] = connectedPair(s.at(p), s.at(p + 1), s.rank());
    return c;
}

bool spanConnected(const std::vector<bool>& adj, Index a, Index b) {
    if (a > b) std::swap(a, b);
    for (Index p = a; p < b; ++p)
        if (!adj[p]) return false;
    return true;
}

// Which line carries the run direction ('own') and which is bounded by the
// window ('other'). The row rule is the column rule with directions swapped.
bool windowAdmits(const AlternatingSnake& s, Index own, Index other, Direction wide) {
    for (Index m = 1; m <= s.runCount(); ++m) {
        if (own < s.breakAt(m - 1) || own > s.breakAt(m)) continue;
        Index lo, hi;
        if (s.run(m) == wide) {
            lo = s.breakClamped(m - 2);
            hi = s.breakClamped(m + 1);
        } else {
            lo = s.breakAt(m - 1);
            hi = s.breakAt(m);
        }
        if (lo <= other && other <= hi) return true;
    }
    return false;
}

std::vector<std::vector<bool>> rulePattern(const AlternatingSnake& s, bool byRow) {
    const Index r = s.size();
    const auto adj = adjacentConnected(s);
    std::vector<std::vector<bool>> out(static_cast<std::size_t>(r), std::vector<bool>(static_cast<std::size_t>(r), false));
    for (Index p = 1; p <= r; ++p)
        for (Index l = 1; l <= r; ++l) {
            if (!intervalInIn({s.at(p).i, s.at(l).j}, s.rank())) continue;
            if (!spanConnected(adj, p, l)) continue;
            const bool ok = byRow ? windowAdmits(s, p, l, Direction::Left) : windowAdmits(s, l, p, Direction::Right);
            out[p - 1][l - 1] = ok;
        }
    return out;
}

class LaplaceSolver {
public:
    LaplaceSolver(const Grid& a, Index n) : a_(a), n_(n), size_(a.size()) {
        if (size_ > 63) throw InvalidInput("matrix too large for cofactor expansion");
        values_.resize(size_ * size_, RingElement(n));
        for (std::size_t p = 0; p < size_; ++p)
            for (std::size_t l = 0; l < size_; ++l)
                if (a_[p][l]) values_[p * size_ + l] = vClass(*a_[p][l], n);
    }

    RingElement solve() {
        const std::uint64_t full = size_ == 64 ? ~0ULL : ((1ULL << size_) - 1);
        return det(full, full);
    }

private:
    struct KeyHash {
        std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
            return std::hash<std::uint64_t>()(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
        }
    };

    bool has(std::size_t p, std::size_t l) const { return a_[p][l].has_value(); }

    RingElement det(std::uint64_t rows, std::uint64_t cols) {
        if (rows == 0) return RingElement::one(n_);
        auto key = std::make_pair(rows, cols);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        // Sparsest remaining line; rows win ties, then the lower index.
        std::size_t bestCount = size_ + 1, bestLine = 0;
        bool bestIsRow = true;
        for (std::size_t p = 0; p < size_; ++p) {
            if (!(rows >> p & 1)) continue;
            std::size_t c = 0;
            for (std::size_t l = 0; l < size_; ++l) c += (cols >> l & 1) && has(p, l);
            if (c < bestCount) bestCount = c, bestLine = p, bestIsRow = true;
        }
        for (std::size_t l = 0; l < size_; ++l) {
            if (!(cols >> l & 1)) continue;
            std::size_t c = 0;
            for (std::size_t p = 0; p < size_; ++p) c += (rows >> p & 1) && has(p, l);
            if (c < bestCount) bestCount = c, bestLine = l, bestIsRow = false;
        }

        RingElement acc(n_);
        if (bestCount > 0) {
            auto position = [](std::uint64_t mask, std::size_t idx) {
                return std::popcount(mask & ((1ULL << idx) - 1));
            };
            for (std::size_t t = 0; t < size_; ++t) {
                const std::size_t p = bestIsRow ? bestLine : t;
                const std::size_t l = bestIsRow ? t : bestLine;
                if (!(rows >> p & 1) || !(cols >> l & 1) || !has(p, l)) continue;
                RingElement minor = det(rows & ~(1ULL << p), cols & ~(1ULL << l));
                if (minor.isZero()) continue;
                RingElement term = values_[p * size_ + l] * minor;
                if ((position(rows, p) + position(cols, l)) % 2 == 1) term = -term;
                acc += term;
            }
        }
        memo_.emplace(key, acc);
        return acc;
    }

    const Grid& a_;
    Index n_;
    std::size_t size_;
    std::vector<RingElement> values_;
    std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, RingElement, KeyHash> memo_;
};

Grid gridOf(const SnakeMatrix& m) {
    Grid g(static_cast<std::size_t>(m.size()));
    for (Index p = 1; p <= m.size(); ++p)
        for (Index l = 1; l <= m.size(); ++l) g[p - 1].push_back(m.entry(p, l));
    return g;
}

}  // namespace

std::vector<std::vector<bool>> rowRulePattern(const AlternatingSnake& s) { return rulePattern(s, true); }
std::vector<std::vector<bool>> columnRulePattern(const AlternatingSnake& s) { return rulePattern(s, false); }

SnakeMatrix::SnakeMatrix(const AlternatingSnake& s) : r_(s.size()), n_(s.rank()), columnIndexed_(s.run(1) == Direction::Left) {
    const auto rows = rowRulePattern(s);
    if (rows != columnRulePattern(s)) throw OracleMismatch("row and column forms of the matrix rule disagree");
    cells_.resize(static_cast<std::size_t>(r_ * r_));
    for (Index p = 1; p <= r_; ++p)
        for (Index l = 1; l <= r_; ++l)
            if (rows[p - 1][l - 1]) cells_[(p - 1) * r_ + (l - 1)] = Interval{s.at(p).i, s.at(l).j};
}

RingElement SnakeMatrix::value(Index p, Index l) const {
    const auto& e = entry(p, l);
    return e ? vClass(*e, n_) : RingElement::zero(n_);
}

std::string SnakeMatrix::pattern() const {
    std::ostringstream os;
    for (Index p = 1; p <= r_; ++p) {
        for (Index l = 1; l <= r_; ++l) os << (l > 1 ? " " : "") << (present(p, l) ? 'X' : '.');
        os << '\n';
    }
    return os.str();
}

std::vector<Permutation> sigmaSet(const SnakeMatrix& m) {
    const Index r = m.size();
    std::vector<Permutation> out;
    Permutation cur;
    std::vector<bool> used(static_cast<std::size_t>(r + 1), false);
    auto ok = [&](Index pos, Index pick) { return m.columnIndexed() ? m.present(pick, pos) : m.present(pos, pick); };
    auto rec = [&](auto&& self, Index pos) -> void {
        if (pos > r) {
            out.push_back(cur);
            return;
        }
        for (Index pick = 1; pick <= r; ++pick) {
            if (used[pick] || !ok(pos, pick)) continue;
            used[pick] = true;
            cur.push_back(pick);
            self(self, pos + 1);
            cur.pop_back();
            used[pick] = false;
        }
    };
    rec(rec, 1);
    return out;
}

int permutationSign(const Permutation& p) {
    std::size_t inv = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b) inv += p[a] > p[b];
    return inv % 2 == 0 ? 1 : -1;
}

std::vector<Interval> applySigma(const AlternatingSnake& s, bool columnIndexed, const Permutation& sigma) {
    std::vector<Interval> out;
    for (Index t = 1; t <= s.size(); ++t) {
        const Index x = sigma[t - 1];
        out.push_back(columnIndexed ? Interval{s.at(x).i, s.at(t).j} : Interval{s.at(t).i, s.at(x).j});
    }
    return out;
}

RingElement detLaplace(const SnakeMatrix& m) {
    const Grid g = gridOf(m);
    return LaplaceSolver(g, m.rank()).solve();
}

RingElement detOfEntries(const Grid& a, Index n) { return LaplaceSolver(a, n).solve(); }

RingElement detLeibniz(const SnakeMatrix& m) {
    RingElement acc(m.rank());
    for (const auto& sigma : sigmaSet(m)) {
        RingElement term = RingElement::one(m.rank());
        for (Index t = 1; t <= m.size(); ++t)
            term = term * (m.columnIndexed() ? m.value(sigma[t - 1], t) : m.value(t, sigma[t - 1]));
        acc += permutationSign(sigma) > 0 ? term : -term;
    }
    return acc;
}

Expansion standardExpansion(const AlternatingSnake& s) {
    if (!isStable(s)) throw MathRefusal("the determinant formula needs a stable snake");
    const SnakeMatrix m(s);
    Expansion e;
    e.n = s.rank();
    const auto sigmas = sigmaSet(m);
    e.sigmaCount = sigmas.size();
    for (const auto& sigma : sigmas) {
        const LWeight w = tupleWeight(applySigma(s, m.columnIndexed(), sigma), s.rank());
        Integer& c = e.terms.try_emplace(w, 0).first->second;
        c += permutationSign(sigma);
    }
    std::erase_if(e.terms, [](const auto& kv) { return kv.second == 0; });
    return e;
}

RingElement expansionClass(const Expansion& e) {
    RingElement acc(e.n);
    for (const auto& [w, c] : e.terms) acc += RingElement::term(e.n, Monomial(), c) * weylClass(w);
    return acc;
}

ValidationResult derivedSnake(const AlternatingSnake& s, Index p) {
    const Index r = s.size();
    if (r < 2 || p < 1 || p > s.breakAt(1))
        throw InvalidInput("derived snake needs r >= 2 and 1 <= p <= r_1");
    const bool left = s.run(1) == Direction::Left;
    std::vector<Interval> ivs;
    if (p >= 2)
        for (Index t = 1; t < p; ++t)
            ivs.push_back(left ? Interval{s.at(t).i, s.at(t + 1).j} : Interval{s.at(t + 1).i, s.at(t).j});
    for (Index t = p + 1; t <= r; ++t) ivs.push_back(s.at(t));

    std::vector<Index> breaks{1};
    const Index shift = s.breakAt(1) == 2 ? 1 : 0;
    for (Index m = 1 + shift; m <= s.runCount(); ++m) breaks.push_back(s.breakAt(m) - 1);
    if (breaks.size() == 1) breaks.push_back(1);
    return validate(ivs, breaks, s.rank());
}

Grid minorEntries(const SnakeMatrix& m, Index p) {
    const bool left = m.columnIndexed();
    Grid out;
    for (Index a = 1; a <= m.size(); ++a) {
        if (left ? a == p : a == 1) continue;
        std::vector<std::optional<Interval>> row;
        for (Index b = 1; b <= m.size(); ++b) {
            if (left ? b == 1 : b == p) continue;
            row.push_back(m.entry(a, b));
        }
        out.push_back(std::move(row));
    }
    return out;
}

namespace {
void requireMinorPre(const AlternatingSnake& s, Index p) {
    if (!isPrime(s) || !isStable(s)) throw InvalidInput("minor check needs a prime stable snake");
    if (p < 1 || p > s.breakAt(1)) throw InvalidInput("minor check needs 1 <= p <= r_1");
}
}  // namespace

bool minorCheck(const AlternatingSnake& s, Index p) {
    requireMinorPre(s, p);
    if (s.size() == 1) return true;
    const ValidationResult d = derivedSnake(s, p);
    if (!d.valid()) return false;
    const SnakeMatrix m(s);
    return detOfEntries(minorEntries(m, p), s.rank()) == detLaplace(SnakeMatrix(*d.snake));
}

bool minorEntriesMatch(const AlternatingSnake& s, Index p) {
    requireMinorPre(s, p);
    if (s.size() == 1) return true;
    const ValidationResult d = derivedSnake(s, p);
    if (!d.valid()) return false;
    return minorEntries(SnakeMatrix(s), p) == gridOf(SnakeMatrix(*d.snake));
}

bool splitCheck(const AlternatingSnake& s) {
    if (!isStable(s)) throw InvalidInput("split check needs a stable snake");
    const auto dec = primeDecomposition(s);
    if (dec.cuts.empty()) throw InvalidInput("split check needs a snake that is not prime");
    const Index l = dec.cuts.front();
    const RingElement whole = detLaplace(SnakeMatrix(s));
    const RingElement left = detLaplace(SnakeMatrix(subSnake(s, 0, l)));
    const RingElement right = detLaplace(SnakeMatrix(subSnake(s, l, s.size())));
    return whole == left * right;
}

}  // namespace altsnake
