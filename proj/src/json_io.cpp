#include "altsnake/json_io.hpp"

#include "altsnake/errors.hpp"

namespace altsnake {

namespace {

Index indexFromJson(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
    return j.get<Index>();
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
    return j.at(key);
}

const Json& arrayField(const Json& j, const char* key) {
    const Json& a = field(j, key);
    if (!a.is_array()) throw InvalidInput(std::string("field '") + key + "' must be an array");
    return a;
}

}  // namespace

Json integerToJson(const Integer& v) {
    if (auto x = toInt64(v)) return *x;
    return v.str();
}

Integer integerFromJson(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
            throw InvalidInput("not a decimal integer: " + s);
        return Integer(s);
    }
    throw InvalidInput("expected an integer");
}

Json intervalToJson(const Interval& iv) { return Json::array({iv.i, iv.j}); }

Json lweightToJson(const LWeight& w) {
    Json gens = Json::array();
    for (const auto& [iv, e] : w.exponents()) gens.push_back(Json::array({iv.i, iv.j, integerToJson(e)}));
    return Json{{"n", w.rank()}, {"gens", gens}};
}

LWeight lweightFromJson(const Json& j) {
    const Index n = indexFromJson(field(j, "n"), "n");
    std::vector<std::pair<Interval, Integer>> gens;
    for (const auto& g : arrayField(j, "gens")) {
        if (!g.is_array() || g.size() != 3) throw InvalidInput("generator must be [i, j, exp]");
        gens.emplace_back(Interval{indexFromJson(g[0], "i"), indexFromJson(g[1], "j")}, integerFromJson(g[2]));
    }
    return LWeight::fromGenerators(gens, n);
}

Json snakeToJson(const AlternatingSnake& s) {
    Json ivs = Json::array();
    for (const auto& iv : s.intervals()) ivs.push_back(intervalToJson(iv));
    return Json{{"n", s.rank()}, {"intervals", ivs}, {"breaks", s.breaks()}};
}

SnakeInput snakeInputFromJson(const Json& j) {
    SnakeInput in;
    in.n = indexFromJson(field(j, "n"), "n");
    for (const auto& iv : arrayField(j, "intervals")) {
        if (!iv.is_array() || iv.size() != 2) throw InvalidInput("interval must be [i, j]");
        in.intervals.push_back({indexFromJson(iv[0], "i"), indexFromJson(iv[1], "j")});
    }
    for (const auto& b : arrayField(j, "breaks")) in.breaks.push_back(indexFromJson(b, "break"));
    return in;
}

AlternatingSnake snakeFromJson(const Json& j) {
    const SnakeInput in = snakeInputFromJson(j);
    return makeSnake(in.intervals, in.breaks, in.n);
}

Json ringElementToJson(const RingElement& x) {
    Json terms = Json::array();
    for (const auto& [m, c] : x.terms()) {
        Json mono = Json::array();
        for (const auto& [iv, e] : m.gens()) mono.push_back(Json::array({iv.i, iv.j, e}));
        terms.push_back(Json{{"coeff", integerToJson(c)}, {"mono", mono}});
    }
    return Json{{"n", x.rank()}, {"terms", terms}};
}

RingElement ringElementFromJson(const Json& j) {
    const Index n = indexFromJson(field(j, "n"), "n");
    RingElement x(n);
    for (const auto& t : arrayField(j, "terms")) {
        Monomial::Map g;
        for (const auto& e : arrayField(t, "mono")) {
            if (!e.is_array() || e.size() != 3) throw InvalidInput("monomial factor must be [i, j, mult]");
            g[{indexFromJson(e[0], "i"), indexFromJson(e[1], "j")}] += indexFromJson(e[2], "mult");
        }
        x += RingElement::term(n, Monomial(std::move(g)), integerFromJson(field(t, "coeff")));
    }
    return x;
}

Json diagnosticToJson(const Diagnostic& d) {
    return Json{{"code", d.code}, {"message", d.message}, {"witnesses", d.witnesses}};
}

Json expansionToJson(const AlternatingSnake& s, const Expansion& e) {
    Json terms = Json::array();
    for (const auto& [w, c] : e.terms) terms.push_back(Json{{"coeff", integerToJson(c)}, {"weight", lweightToJson(w)}});
    return Json{{"snake", snakeToJson(s)}, {"terms", terms}, {"sigma_count", e.sigmaCount}};
}

Json klTableToJson(const KLTable& t) {
    Json rows = Json::array();
    for (const auto& [nu, c] : t.rows) rows.push_back(Json{{"nu_plus_rho", nu}, {"c", integerToJson(c)}});
    return Json{{"mu_plus_rho", t.muPlusRho}, {"lambda_plus_rho", t.lambdaPlusRho}, {"rows", rows}};
}

}  // namespace altsnake
