#pragma once

// JSON forms of the library values. Integers that do not fit in 64 bits are
// written as decimal strings; readers accept either form.

#include <json.hpp>

#include "altsnake/cat_o.hpp"
#include "altsnake/detform.hpp"
#include "altsnake/groth_ring.hpp"
#include "altsnake/path_model.hpp"
#include "altsnake/snake.hpp"

namespace altsnake {

using Json = nlohmann::ordered_json;

Json integerToJson(const Integer& v);
Integer integerFromJson(const Json& j);

Json intervalToJson(const Interval& iv);
Json lweightToJson(const LWeight& w);
LWeight lweightFromJson(const Json& j);

Json snakeToJson(const AlternatingSnake& s);

struct SnakeInput {
    std::vector<Interval> intervals;
    std::vector<Index> breaks;
    Index n = 1;
};

/// Schema check only; validity as a snake is left to validate().
SnakeInput snakeInputFromJson(const Json& j);
AlternatingSnake snakeFromJson(const Json& j);

Json ringElementToJson(const RingElement& x);
RingElement ringElementFromJson(const Json& j);

Json diagnosticToJson(const Diagnostic& d);
Json expansionToJson(const AlternatingSnake& s, const Expansion& e);
Json klTableToJson(const KLTable& t);

}  // namespace altsnake
