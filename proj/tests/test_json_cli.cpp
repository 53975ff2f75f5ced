#include <doctest.h>

#include <sstream>

#include "altsnake/cli.hpp"
#include "altsnake/errors.hpp"
#include "altsnake/json_io.hpp"
#include "support/generators.hpp"

using namespace altsnake;
using namespace altsnake::testing;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& stdinText = "") {
    std::istringstream in(stdinText);
    std::ostringstream out, err;
    const int code = runCli(args, in, out, err);
    return {code, out.str(), err.str()};
}

const std::string kExampleOne = R"({"n": 5, "intervals": [[0, 4], [-1, 1], [1, 2], [2, 3]], "breaks": [1, 2, 4]})";
const std::string kPair = R"({"n": 2, "intervals": [[0, 2], [-1, 1]], "breaks": [1, 2]})";

}  // namespace

TEST_CASE("integer and weight JSON round trips") {
    CHECK(integerToJson(Integer(-7)) == Json(-7));
    const Integer big = Integer(1) << 100;
    CHECK(integerToJson(big).is_string());
    CHECK(integerFromJson(integerToJson(big)) == big);
    CHECK(integerFromJson(Json("-12")) == -12);

    const auto w = LWeight::fromGenerators({{{1, 3}, Integer(2)}, {{-1, 0}, Integer(-1)}}, 4);
    const Json j = lweightToJson(w);
    CHECK(j.dump() == R"({"n":4,"gens":[[-1,0,-1],[1,3,2]]})");
    CHECK(lweightFromJson(j) == w);
    CHECK(lweightToJson(lweightFromJson(j)).dump() == j.dump());

    Rng rng(8);
    for (int t = 0; t < 200; ++t) {
        const Index n = uniform(rng, 1, 6);
        std::vector<std::pair<Interval, Integer>> gens;
        for (Index g = uniform(rng, 0, 4); g > 0; --g) {
            const Index i = uniform(rng, -3, 3);
            gens.push_back({{i, i + uniform(rng, 0, n + 1)}, Integer(uniform(rng, -3, 3))});
        }
        const auto x = LWeight::fromGenerators(gens, n);
        CHECK(lweightFromJson(lweightToJson(x)) == x);
    }
}

TEST_CASE("snake and ring element JSON") {
    const auto s = snakeFromJson(Json::parse(kExampleOne));
    CHECK(snakeToJson(s).dump() == R"({"n":5,"intervals":[[0,4],[-1,1],[1,2],[2,3]],"breaks":[1,2,4]})");
    CHECK(snakeFromJson(snakeToJson(s)) == s);

    const auto x = vClass({0, 2}, 3) * vClass({-1, 1}, 3) - RingElement::one(3);
    CHECK(ringElementFromJson(ringElementToJson(x)) == x);
    CHECK(ringElementToJson(x).dump() ==
          R"({"n":3,"terms":[{"coeff":-1,"mono":[]},{"coeff":1,"mono":[[-1,1,1],[0,2,1]]}]})");

    CHECK_THROWS_AS(snakeInputFromJson(Json::parse(R"({"n": 2, "intervals": [[0]], "breaks": [1]})")), InvalidInput);
    CHECK_THROWS_AS(snakeInputFromJson(Json::parse(R"({"intervals": [[0, 1]], "breaks": [1]})")), InvalidInput);
}

TEST_CASE("validate command") {
    const auto r = run({"validate", "-"}, kExampleOne);
    CHECK(r.code == kOk);
    const Json j = Json::parse(r.out);
    CHECK(j["version"] == kVersion);
    CHECK(j["canonical_order"] == true);
    CHECK(j["valid"] == true);
    CHECK(j["runs"] == Json::array({"left", "right"}));
    CHECK(j["stable"] == true);
    CHECK(j["prime"] == true);

    const auto bad = run({"validate"}, R"({"n": 2, "intervals": [[0, 2], [0, 2]], "breaks": [1, 2]})");
    CHECK(bad.code == kInvalidInput);
    const Json b = Json::parse(bad.out);
    CHECK(b["valid"] == false);
    CHECK(b["diagnostics"][0]["code"] == "alt-1");
}

TEST_CASE("decompose and det-formula commands") {
    const auto d = run({"decompose"}, R"({"n": 5, "intervals": [[0, 4], [-2, 1], [1, 4]], "breaks": [1, 2, 3]})");
    CHECK(d.code == kOk);
    const Json dj = Json::parse(d.out);
    CHECK(dj["factors"].size() == 2);
    CHECK(dj["cuts"] == Json::array({2}));

    const auto e = run({"det-formula", "--oracle"}, kPair);
    CHECK(e.code == kOk);
    const Json ej = Json::parse(e.out);
    CHECK(ej["terms"].size() == 2);
    CHECK(ej["sigma_count"] == 2);
    CHECK(ej["oracle_checked"] == true);
    CHECK(ej["terms"][0]["weight"]["gens"].dump() == "[[-1,1,1],[0,2,1]]");
    CHECK(ej["terms"][0]["coeff"] == 1);
    CHECK(ej["terms"][1]["weight"]["gens"].dump() == "[[0,1,1]]");
    CHECK(ej["terms"][1]["coeff"] == -1);
}

TEST_CASE("character and kl commands") {
    const auto c = run({"character"}, kPair);
    CHECK(c.code == kOk);
    const Json cj = Json::parse(c.out);
    CHECK(cj["dim"] == 6);

    const auto k = run({"kl"}, kPair);
    CHECK(k.code == kOk);
    const Json kj = Json::parse(k.out);
    CHECK(kj["mu_plus_rho"] == Json::array({0, -1}));
    CHECK(kj["rows"].dump() == R"([{"nu_plus_rho":[-1,0],"c":-1},{"nu_plus_rho":[0,-1],"c":1}])");
}

TEST_CASE("generators on the command line") {
    const auto g = run({"gen", "mu-lambda", "--mu", "0,1", "--lambda", "3,2", "--n", "4"});
    CHECK(g.code == kOk);
    const auto ex = run({"gen", "exmore", "--breaks", "1,2", "--i", "1,0", "--j", "3,2"});
    CHECK(ex.code == kOk);
    CHECK(Json::parse(ex.out).contains("n_min"));
}

TEST_CASE("exit codes") {
    CHECK(run({"character"}, kExampleOne).code == kRefusal);
    CHECK(run({"det-formula"}, R"({"n": 6, "intervals": [[0, 4], [-2, 1], [-1, 5]], "breaks": [1, 2, 3]})").code == kRefusal);
    CHECK(run({"kl"}, kExampleOne).code == kRefusal);
    CHECK(run({"decompose"}, "{not json").code == kInvalidInput);
    CHECK(run({"decompose", "--n", "3"}, kExampleOne).code == kInvalidInput);
    CHECK(run({"decompose", "/nonexistent/file.json"}).code == kInvalidInput);
    CHECK(run({"frobnicate"}).code == kInvalidInput);

    const auto refused = run({"kl"}, kExampleOne);
    const Json e = Json::parse(refused.err);
    CHECK(e["error"]["code"] == "refusal");
}

TEST_CASE("rank override only goes up") {
    const auto up = run({"validate", "--n", "9"}, kExampleOne);
    CHECK(up.code == kOk);
    CHECK(Json::parse(up.out)["snake"]["n"] == 9);
}

TEST_CASE("output is deterministic and free of trailing whitespace") {
    for (const auto& cmd : {"validate", "decompose", "det-formula", "character", "kl"}) {
        const auto a = run({cmd}, kPair), b = run({cmd}, kPair);
        CHECK(a.code == kOk);
        CHECK(a.out == b.out);
        CHECK(a.out.back() == '\n');
        std::istringstream lines(a.out);
        for (std::string line; std::getline(lines, line);) CHECK((line.empty() || (line.back() != ' ' && line.back() != '\t')));
    }
}
