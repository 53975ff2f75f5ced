#include "altsnake/snake.hpp"

#include <algorithm>
#include <sstream>

#include "altsnake/errors.hpp"

namespace altsnake {

struct SnakeBuilder {
    static AlternatingSnake make(Index n, std::vector<Interval> ivs, std::vector<Index> breaks,
                                 std::vector<Direction> runs) {
        AlternatingSnake s;
        s.n_ = n;
        s.intervals_ = std::move(ivs);
        s.breaks_ = std::move(breaks);
        s.runs_ = std::move(runs);
        return s;
    }
};

namespace {

std::string show(const Interval& iv) {
    std::ostringstream os;
    os << iv;
    return os.str();
}

std::optional<Direction> pairDirection(const Interval& a, const Interval& b) {
    if (b.i < a.i && b.j < a.j) return Direction::Left;
    if (b.i > a.i && b.j > a.j) return Direction::Right;
    return std::nullopt;
}

// Re-validates a construction that is valid by theory; a failure is a bug.
AlternatingSnake rebuild(const std::vector<Interval>& ivs, const std::vector<Index>& breaks, Index n,
                         const char* what) {
    ValidationResult v = validate(ivs, breaks, n);
    if (!v.valid()) throw OracleMismatch(std::string(what) + " produced an invalid snake: " + v.diagnostics.front().message);
    return *v.snake;
}

}  // namespace

const char* directionName(Direction d) { return d == Direction::Left ? "left" : "right"; }

Index AlternatingSnake::breakClamped(Index m) const {
    if (m <= 0) return 1;
    if (m >= runCount()) return size();
    return breakAt(m);
}

LWeight AlternatingSnake::weight() const { return tupleWeight(intervals_, n_); }

LWeight tupleWeight(const std::vector<Interval>& intervals, Index n) {
    std::vector<std::pair<Interval, Integer>> gens;
    gens.reserve(intervals.size());
    for (const auto& iv : intervals) gens.emplace_back(iv, Integer(1));
    return LWeight::fromGenerators(gens, n);
}

ValidationResult validate(const std::vector<Interval>& intervals, const std::vector<Index>& breaksIn, Index n) {
    ValidationResult out;
    auto& diags = out.diagnostics;
    auto report = [&](std::string code, std::string msg, std::vector<Index> w) {
        diags.push_back({std::move(code), std::move(msg), std::move(w)});
    };

    if (n < 1) {
        report("malformed", "rank must be positive", {});
        return out;
    }
    const Index r = static_cast<Index>(intervals.size());
    if (r == 0) {
        report("malformed", "empty interval list", {});
        return out;
    }
    for (Index p = 1; p <= r; ++p) {
        const Interval& iv = intervals[p - 1];
        if (!intervalInIn(iv, n))
            report("malformed", "interval " + show(iv) + " at position " + std::to_string(p) + " not in I_" + std::to_string(n), {p});
    }

    std::vector<Index> breaks = breaksIn;
    if (r == 1 && breaks == std::vector<Index>{1}) breaks = {1, 1};
    bool breaksOk = breaks.size() >= 2 && breaks.front() == 1 && breaks.back() == r;
    if (breaksOk && r == 1) breaksOk = breaks.size() == 2;
    if (breaksOk && r > 1)
        for (std::size_t t = 1; t < breaks.size(); ++t) breaksOk = breaksOk && breaks[t - 1] < breaks[t];
    if (!breaksOk) {
        report("malformed", "break vector must be 1 = r_0 < r_1 < ... < r_k = r", {});
        return out;
    }

    for (Index s = 1; s <= r; ++s)
        for (Index p = s + 1; p <= r; ++p)
            if (intervals[s - 1] == intervals[p - 1])
                report("alt-1", "positions " + std::to_string(s) + " and " + std::to_string(p) + " repeat " + show(intervals[s - 1]), {s, p});

    const Index k = static_cast<Index>(breaks.size()) - 1;
    std::vector<std::optional<Direction>> dirs(static_cast<std::size_t>(k));
    for (Index m = 1; m <= k; ++m) {
        const Index lo = breaks[m - 1], hi = breaks[m];
        if (lo == hi) {
            dirs[m - 1] = Direction::Left;
            continue;
        }
        auto d = pairDirection(intervals[lo - 1], intervals[lo]);
        bool ok = d.has_value();
        for (Index p = lo; ok && p < hi; ++p) ok = pairDirection(intervals[p - 1], intervals[p]) == d;
        if (ok) {
            dirs[m - 1] = d;
        } else {
            report("alt0", "run " + std::to_string(m) + " (positions " + std::to_string(lo) + ".." + std::to_string(hi) + ") is not strictly monotone in one direction", {m});
        }
    }

    for (Index m = 1; m < k; ++m)
        if (dirs[m - 1] && dirs[m] && *dirs[m - 1] == *dirs[m])
            report("alt1", "runs " + std::to_string(m) + " and " + std::to_string(m + 1) + " have the same direction", {m, m + 1});

    for (Index s = 1; s <= r; ++s)
        for (Index l = s + 2; l <= r; ++l) {
            Index m = 0;
            for (Index t = 1; t < k && m == 0; ++t)
                if (s < breaks[t] && breaks[t] < l) m = t;
            if (m != 0 && overlap(intervals[s - 1], intervals[l - 1]))
                report("alt2", "positions " + std::to_string(s) + " and " + std::to_string(l) + " overlap across break r_" + std::to_string(m), {s, l, m});
        }

    if (!diags.empty()) return out;
    std::vector<Direction> runs;
    for (auto& d : dirs) runs.push_back(*d);
    out.snake = SnakeBuilder::make(n, intervals, std::move(breaks), std::move(runs));
    return out;
}

AlternatingSnake makeSnake(const std::vector<Interval>& intervals, const std::vector<Index>& breaks, Index n) {
    ValidationResult v = validate(intervals, breaks, n);
    if (!v.valid()) throw InvalidInput(v.diagnostics.front().code + ": " + v.diagnostics.front().message);
    return *v.snake;
}

AlternatingSnake withRank(const AlternatingSnake& s, Index n) { return makeSnake(s.intervals(), s.breaks(), n); }

AlternatingSnake subSnake(const AlternatingSnake& s, Index p, Index pPrime) {
    if (p < 0 || p >= pPrime || pPrime > s.size())
        throw InvalidInput("sub-snake (" + std::to_string(p) + "," + std::to_string(pPrime) + ") out of range for r=" + std::to_string(s.size()));
    std::vector<Interval> ivs(s.intervals().begin() + p, s.intervals().begin() + pPrime);
    std::vector<Index> breaks{1};
    for (Index t = 1; t < s.runCount(); ++t) {
        const Index rt = s.breakAt(t);
        if (p + 1 < rt && rt < pPrime) breaks.push_back(rt - p);
    }
    breaks.push_back(pPrime - p);
    return rebuild(ivs, breaks, s.rank(), "sub-snake");
}

AlternatingSnake reverse(const AlternatingSnake& s) {
    const Index r = s.size(), k = s.runCount();
    std::vector<Interval> ivs(s.intervals().rbegin(), s.intervals().rend());
    std::vector<Index> breaks{1};
    for (Index m = k - 1; m >= 1; --m) breaks.push_back(r - s.breakAt(m) + 1);
    breaks.push_back(r);
    return rebuild(ivs, breaks, s.rank(), "reversal");
}

AlternatingSnake omegaSnake(const AlternatingSnake& s) {
    std::vector<Interval> ivs;
    for (const auto& iv : s.intervals()) ivs.push_back(omega(iv));
    return rebuild(ivs, s.breaks(), s.rank(), "omega");
}

std::vector<Interval> concatIntervals(const std::vector<AlternatingSnake>& parts) {
    std::vector<Interval> out;
    for (const auto& f : parts) out.insert(out.end(), f.intervals().begin(), f.intervals().end());
    return out;
}

bool isConnectedSnake(const AlternatingSnake& s) {
    for (Index p = 1; p < s.size(); ++p)
        if (!connectedPair(s.at(p), s.at(p + 1), s.rank())) return false;
    return true;
}

bool isStable(const AlternatingSnake& s) {
    for (Index m = 1; m < s.runCount(); ++m) {
        const Interval& a = s.at(s.breakAt(m) - 1);
        const Interval& b = s.at(s.breakAt(m) + 1);
        if (b.i < a.i && !(b.j < a.i)) return false;
        if (a.j < b.j && !(a.j < b.i)) return false;
    }
    return true;
}

bool isPrime(const AlternatingSnake& s) {
    if (!isConnectedSnake(s)) return false;
    for (Index m = 1; m < s.runCount(); ++m) {
        const Interval& a = s.at(s.breakAt(m) - 1);
        const Interval& b = s.at(s.breakAt(m) + 1);
        if (a.i == b.i || a.j == b.j) return false;
    }
    return true;
}

namespace {

// Smallest p such that the snake splits after p, or nullopt when prime.
std::optional<Index> firstCut(const AlternatingSnake& s) {
    std::optional<Index> best;
    auto offer = [&](Index p) {
        if (!best || p < *best) best = p;
    };
    for (Index p = 1; p < s.size(); ++p)
        if (!connectedPair(s.at(p), s.at(p + 1), s.rank())) {
            offer(p);
            break;
        }
    for (Index m = 1; m < s.runCount(); ++m) {
        const Index rm = s.breakAt(m);
        const Interval& a = s.at(rm - 1);
        const Interval& b = s.at(rm + 1);
        bool less;
        if (a.i == b.i) less = a.j < b.j;
        else if (a.j == b.j) less = a.i < b.i;
        else continue;
        const Index eps = (s.run(m) == Direction::Left) == less ? 0 : 1;
        offer(rm - eps);
    }
    return best;
}

}  // namespace

PrimeDecomposition primeDecomposition(const AlternatingSnake& s) {
    PrimeDecomposition out;
    AlternatingSnake cur = s;
    Index offset = 0;
    while (auto p = firstCut(cur)) {
        out.factors.push_back(subSnake(cur, 0, *p));
        out.cuts.push_back(offset + *p);
        offset += *p;
        cur = subSnake(cur, *p, cur.size());
    }
    out.factors.push_back(cur);
    return out;
}

std::vector<AlternatingSnake> primeDecompose(const AlternatingSnake& s) { return primeDecomposition(s).factors; }

bool containedInPrimeFactor(const AlternatingSnake& s, Index l, Index lPrime) {
    if (l < 1 || l > lPrime || lPrime > s.size())
        throw InvalidInput("positions (" + std::to_string(l) + "," + std::to_string(lPrime) + ") out of range");
    for (Index c : primeDecomposition(s).cuts)
        if (l <= c && c <= lPrime - 1) return false;
    return true;
}

TauResult tauP(const AlternatingSnake& s, Index p) {
    if (p < 1 || p >= s.size()) throw InvalidInput("tau_p needs 1 <= p <= r-1, got p=" + std::to_string(p));
    if (!containedInPrimeFactor(s, p, p + 1))
        throw InvalidInput("tau_p: positions " + std::to_string(p) + " and " + std::to_string(p + 1) + " lie in different prime factors");
    const Interval& a = s.at(p);
    const Interval& b = s.at(p + 1);
    TauResult out{s.intervals(), LWeight(s.rank())};
    out.intervals[p - 1] = {b.i, a.j};
    out.intervals[p] = {a.i, b.j};
    out.gamma = a.i < b.i ? gammaProduct(a, b, s.rank()) : gammaProduct(b, a, s.rank());
    return out;
}

AlternatingSnake genMuLambdaSnake(const std::vector<Index>& mu, const std::vector<Index>& lambda, Index n) {
    const Index r = static_cast<Index>(mu.size());
    if (r == 0 || lambda.size() != mu.size()) throw InvalidInput("mu and lambda must be nonempty of equal length");
    for (Index t = 1; t < r; ++t) {
        const bool odd = t % 2 == 1;
        const Index m0 = mu[t - 1], m1 = mu[t];
        if (odd ? !(m0 <= m1) : !(m0 < m1))
            throw InvalidInput("mu chain fails at index " + std::to_string(t) + (odd ? ": need mu_t <= mu_{t+1}" : ": need mu_t < mu_{t+1}"));
        const Index l0 = lambda[t - 1], l1 = lambda[t];
        if (odd ? !(l0 > l1) : !(l0 >= l1))
            throw InvalidInput("lambda chain fails at index " + std::to_string(t) + (odd ? ": need lambda_t > lambda_{t+1}" : ": need lambda_t >= lambda_{t+1}"));
    }
    const Index first = lambda.front() - mu.front(), last = lambda.back() - mu.back();
    if (!(n + 1 > first && first >= last && last > 0))
        throw InvalidInput("need n+1 > lambda_1 - mu_1 >= lambda_r - mu_r > 0");

    auto m = [&](Index t) { return mu[std::min(t, r) - 1]; };
    auto l = [&](Index t) { return lambda[std::min(t, r) - 1]; };
    std::vector<Interval> ivs{{m(1), l(2)}};
    for (Index p = 2; p <= r; ++p) {
        if (p % 2 == 0) ivs.push_back({m(p + 1), l(p - 1)});
        else ivs.push_back({m(p - 1), l(p + 1)});
    }
    std::vector<Index> breaks;
    for (Index t = 1; t <= r; ++t) breaks.push_back(t);
    return makeSnake(ivs, breaks, n);
}

ExmoreChains exmoreChains(const std::vector<Index>& breaks) {
    ExmoreChains out;
    const Index k = static_cast<Index>(breaks.size()) - 1;
    auto rb = [&](Index m) { return breaks[static_cast<std::size_t>(m)]; };
    auto range = [](Index from, Index to) {
        std::vector<Index> v;
        if (from <= to)
            for (Index x = from; x <= to; ++x) v.push_back(x);
        else
            for (Index x = from; x >= to; --x) v.push_back(x);
        return v;
    };
    // Segments listed from the largest value down; strict inside a segment,
    // each segment carrying the strictness of its link to the previous one.
    struct Segment {
        std::vector<Index> positions;
        bool strictJoin;
    };
    auto chain = [](std::vector<ChainLink>& links, const std::vector<Segment>& segs) {
        std::optional<Index> prev;
        for (const auto& seg : segs) {
            for (std::size_t t = 0; t < seg.positions.size(); ++t) {
                if (prev) links.push_back({*prev, seg.positions[t], t == 0 ? seg.strictJoin : true});
                prev = seg.positions[t];
            }
        }
    };

    for (Index m = 0; 2 * m + 1 <= k; ++m) {
        const bool has2 = 2 * m + 2 <= k, has3 = 2 * m + 3 <= k;
        std::vector<Segment> iseg;
        if (has3) {
            iseg.push_back({range(rb(2 * m + 2), rb(2 * m + 3)), false});
            // A one-step final run would otherwise allow i_{r-2} = i_r at the last break.
            const bool tight = rb(2 * m + 3) == rb(2 * m + 2) + 1;
            if (rb(2 * m + 2) - 1 >= rb(2 * m + 1) + 1)
                iseg.push_back({range(rb(2 * m + 2) - 1, rb(2 * m + 1) + 1), tight});
        } else if (has2) {
            iseg.push_back({range(rb(2 * m + 2), rb(2 * m + 1) + 1), false});
        }
        iseg.push_back({range(rb(2 * m), rb(2 * m + 1)), false});
        chain(out.i, iseg);

        std::vector<Segment> jseg;
        if (has2) {
            jseg.push_back({range(rb(2 * m), rb(2 * m + 1) - 1), true});
            jseg.push_back({range(rb(2 * m + 2), rb(2 * m + 1)), true});
            if (has3) jseg.push_back({range(rb(2 * m + 2) + 1, rb(2 * m + 3)), true});
        } else {
            jseg.push_back({range(rb(2 * m), rb(2 * m + 1)), true});
        }
        chain(out.j, jseg);
    }
    return out;
}

ExmoreResult genExmoreFamily(const std::vector<Index>& breaks, const std::vector<Index>& ivec,
                             const std::vector<Index>& jvec) {
    const Index r = static_cast<Index>(ivec.size());
    if (r == 0 || jvec.size() != ivec.size()) throw InvalidInput("i and j vectors must be nonempty of equal length");
    if (breaks.size() < 2 || breaks.front() != 1 || breaks.back() != r)
        throw InvalidInput("break vector must start at 1 and end at r");
    const Index k = static_cast<Index>(breaks.size()) - 1;
    for (Index l = 1; l <= k; ++l) {
        const bool need = l <= k - 1;
        if (need ? !(breaks[l] > breaks[l - 1] + 1) : !(breaks[l] > breaks[l - 1]))
            throw InvalidInput("break condition fails at r_" + std::to_string(l));
    }

    Index worst = 0;
    for (Index s = 1; s <= r; ++s)
        for (Index p = 1; p <= r; ++p) {
            const Index delta = s == p ? 1 : 0;
            const Index gap = jvec[s - 1] - ivec[p - 1];
            if (gap < delta)
                throw InvalidInput("need j_" + std::to_string(s) + " - i_" + std::to_string(p) + " >= " + std::to_string(delta));
            worst = std::max(worst, gap + delta);
        }

    const ExmoreChains chains = exmoreChains(breaks);
    auto check = [](const std::vector<ChainLink>& links, const std::vector<Index>& v, const char* name) {
        for (const auto& c : links) {
            const Index x = v[c.a - 1], y = v[c.b - 1];
            if (c.strict ? !(x > y) : !(x >= y))
                throw InvalidInput(std::string(name) + " chain fails: need " + name + "_" + std::to_string(c.a) +
                                   (c.strict ? " > " : " >= ") + name + "_" + std::to_string(c.b));
        }
    };
    check(chains.i, ivec, "i");
    check(chains.j, jvec, "j");

    const Index nMin = std::max<Index>(1, worst - 1);
    std::vector<Interval> ivs;
    for (Index s = 0; s < r; ++s) ivs.push_back({ivec[s], jvec[s]});
    AlternatingSnake snake = rebuild(ivs, breaks, nMin, "family generator");
    if (!isPrime(snake) || !isStable(snake)) throw OracleMismatch("family generator produced a snake that is not prime and stable");
    return {snake, nMin};
}

}  // namespace altsnake
