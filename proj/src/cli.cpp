#include "altsnake/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "altsnake/errors.hpp"
#include "altsnake/json_io.hpp"

namespace altsnake {

namespace {

struct Options {
    std::string input = "-";
    std::string output;
    Index rank = 0;  // 0: keep the rank of the input
    bool oracle = false;
    std::vector<Index> mu, lambda, breaks, ivec, jvec;
};

Json readJson(const std::string& path, std::istream& in) {
    try {
        if (path == "-") return Json::parse(in);
        std::ifstream f(path);
        if (!f) throw InvalidInput("cannot open " + path);
        return Json::parse(f);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

Json envelope(const char* command) {
    return Json{{"version", kVersion}, {"command", command}, {"canonical_order", true}};
}

void merge(Json& into, const Json& from) {
    for (const auto& [k, v] : from.items()) into[k] = v;
}

SnakeInput loadSnake(const Options& o, std::istream& in) {
    SnakeInput s = snakeInputFromJson(readJson(o.input, in));
    if (o.rank != 0) {
        if (o.rank < s.n) throw InvalidInput("--n may only raise the rank (input has n=" + std::to_string(s.n) + ")");
        s.n = o.rank;
    }
    return s;
}

AlternatingSnake loadValidSnake(const Options& o, std::istream& in) {
    const SnakeInput s = loadSnake(o, in);
    return makeSnake(s.intervals, s.breaks, s.n);
}

Json cmdValidate(const Options& o, std::istream& in, int& code) {
    const SnakeInput s = loadSnake(o, in);
    const ValidationResult v = validate(s.intervals, s.breaks, s.n);
    Json out = envelope("validate");
    out["valid"] = v.valid();
    if (v.valid()) {
        Json runs = Json::array();
        for (auto d : v.snake->runs()) runs.push_back(directionName(d));
        out["runs"] = runs;
        out["stable"] = isStable(*v.snake);
        out["prime"] = isPrime(*v.snake);
        out["snake"] = snakeToJson(*v.snake);
    } else {
        Json diags = Json::array();
        for (const auto& d : v.diagnostics) diags.push_back(diagnosticToJson(d));
        out["diagnostics"] = diags;
        code = kInvalidInput;
    }
    return out;
}

Json cmdDecompose(const Options& o, std::istream& in) {
    const AlternatingSnake s = loadValidSnake(o, in);
    const PrimeDecomposition d = primeDecomposition(s);
    Json out = envelope("decompose");
    out["prime"] = isPrime(s);
    out["stable"] = isStable(s);
    out["cuts"] = d.cuts;
    Json factors = Json::array();
    for (const auto& f : d.factors) factors.push_back(snakeToJson(f));
    out["factors"] = factors;
    return out;
}

Json cmdDetFormula(const Options& o, std::istream& in) {
    const AlternatingSnake s = loadValidSnake(o, in);
    const Expansion e = standardExpansion(s);
    if (o.oracle) {
        const SnakeMatrix m(s);
        const RingElement laplace = detLaplace(m);
        if (laplace != detLeibniz(m)) throw OracleMismatch("cofactor and permutation-sum determinants differ");
        if (laplace != expansionClass(e)) throw OracleMismatch("expansion does not reproduce the determinant");
    }
    Json out = envelope("det-formula");
    merge(out, expansionToJson(s, e));
    out["oracle_checked"] = o.oracle;
    return out;
}

Json cmdCharacter(const Options& o, std::istream& in) {
    const AlternatingSnake s = loadValidSnake(o, in);
    if (s.runCount() != 1) throw MathRefusal("the path model covers single-run snakes only");
    Json out = envelope("character");
    out["snake"] = snakeToJson(s);
    out["dim"] = integerToJson(snakeDim(s));
    Json weights = Json::array();
    for (const auto& w : ellWeightSet(s)) weights.push_back(lweightToJson(w));
    out["weights"] = weights;
    return out;
}

Json cmdKL(const Options& o, std::istream& in) {
    const AlternatingSnake s = loadValidSnake(o, in);
    Json out = envelope("kl");
    merge(out, klTableToJson(klTable(s)));
    return out;
}

Json cmdGenMuLambda(const Options& o) {
    if (o.rank < 1) throw InvalidInput("--n is required");
    Json out = envelope("gen mu-lambda");
    out["snake"] = snakeToJson(genMuLambdaSnake(o.mu, o.lambda, o.rank));
    return out;
}

Json cmdGenExmore(const Options& o) {
    const ExmoreResult r = genExmoreFamily(o.breaks, o.ivec, o.jvec);
    Json out = envelope("gen exmore");
    out["snake"] = snakeToJson(r.snake);
    out["n_min"] = r.nMin;
    return out;
}

void emit(const Json& j, const Options& o, std::ostream& out) {
    const std::string text = j.dump(2) + "\n";
    if (o.output.empty() || o.output == "-") {
        out << text;
        return;
    }
    std::ofstream f(o.output);
    if (!f) throw InvalidInput("cannot write " + o.output);
    f << text;
}

void emitError(std::ostream& err, const char* code, const std::string& message) {
    err << Json{{"error", {{"code", code}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Alternating snake combinatorics", "altsnake"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Options o;
    auto fileCommand = [&](const char* name, const char* help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("file", o.input, "Snake JSON, or - for stdin")->capture_default_str();
        sub->add_option("--n", o.rank, "Raise the rank before validating");
        sub->add_option("-o,--output", o.output, "Output path");
        return sub;
    };
    CLI::App* validateCmd = fileCommand("validate", "Check the alternating-snake conditions");
    CLI::App* decomposeCmd = fileCommand("decompose", "Prime factorization");
    CLI::App* detCmd = fileCommand("det-formula", "Standard-module expansion of the irreducible class");
    detCmd->add_flag("--oracle", o.oracle, "Cross-check against the permutation-sum determinant");
    CLI::App* charCmd = fileCommand("character", "l-weights and dimension from non-crossing paths");
    CLI::App* klCmd = fileCommand("kl", "Verma coefficients for gl_r");

    CLI::App* gen = app.add_subcommand("gen", "Generate snakes from parameters");
    gen->require_subcommand(1);
    CLI::App* genML = gen->add_subcommand("mu-lambda", "Snake from weakly interlaced mu and lambda");
    genML->add_option("--mu", o.mu)->required()->delimiter(',');
    genML->add_option("--lambda", o.lambda)->required()->delimiter(',');
    genML->add_option("--n", o.rank)->required();
    genML->add_option("-o,--output", o.output);
    CLI::App* genEx = gen->add_subcommand("exmore", "Prime stable snake from a break vector and endpoints");
    genEx->add_option("--breaks", o.breaks)->required()->delimiter(',');
    genEx->add_option("--i", o.ivec)->required()->delimiter(',');
    genEx->add_option("--j", o.jvec)->required()->delimiter(',');
    genEx->add_option("-o,--output", o.output);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInvalidInput;
    }

    int code = kOk;
    try {
        Json result;
        if (*validateCmd) result = cmdValidate(o, in, code);
        else if (*decomposeCmd) result = cmdDecompose(o, in);
        else if (*detCmd) result = cmdDetFormula(o, in);
        else if (*charCmd) result = cmdCharacter(o, in);
        else if (*klCmd) result = cmdKL(o, in);
        else if (*genML) result = cmdGenMuLambda(o);
        else result = cmdGenExmore(o);
        emit(result, o, out);
        return code;
    } catch (const InvalidInput& e) {
        emitError(err, "invalid_input", e.what());
        return kInvalidInput;
    } catch (const MathRefusal& e) {
        emitError(err, "refusal", e.what());
        return kRefusal;
    } catch (const OracleMismatch& e) {
        emitError(err, "oracle_mismatch", e.what());
        return kOracleMismatch;
    } catch (const Json::exception& e) {
        emitError(err, "invalid_input", e.what());
        return kInvalidInput;
    }
}

}  // namespace altsnake
