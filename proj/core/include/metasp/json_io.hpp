#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "metasp/classify.hpp"
#include "metasp/hecke.hpp"
#include "metasp/oracle.hpp"
#include "metasp/weights.hpp"

namespace metasp {

using json = nlohmann::ordered_json;

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const ParabolicSubset& J);
json to_json(const SmoothCharacterFx& c);
json to_json(const GenuineTorusCharacter& s);
json to_json(const QRestrictedWeight& w);
json to_json(const TorusHeckeElement& h);
json to_json(const SupersingularDatum& d);
json to_json(const SupersingularTriple& t);
json to_json(const CosetCountResult& r);
json to_json(const LeviShape& s);

ParabolicSubset parabolic_from_json(const json& j, int n);
GenuineTorusCharacter torus_character_from_json(const json& j, const ValueGroup& G);
// Accepts either a datum object or a bare torus character object.
SupersingularDatum datum_from_json(const json& j, int n, const ValueGroup& G);

enum class Schema { HeckeElement, TripleList, CountRow, Character, Weight, Object };

// Throws SchemaError describing the first violation.
void validate(const json& j, Schema s);

}  // namespace metasp
