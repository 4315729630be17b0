#include <gtest/gtest.h>

#include "metasp/json_io.hpp"

using namespace metasp;

namespace {

const LocalField F5 = LocalField::make(5);
const ValueGroup G5 = ValueGroup::make_default(F5);

}  // namespace

TEST(JsonIo, HeckeElementShape) {
  const auto j = to_json(metaplectic_satake_T2lambda(2, 2));
  EXPECT_EQ(j.dump(), R"({"terms":[{"mu":[-2,-2],"c":1}]})");
  EXPECT_NO_THROW(validate(j, Schema::HeckeElement));
  EXPECT_NO_THROW(validate(to_json(metaplectic_satake_T2lambda(1, 2)), Schema::HeckeElement));
  EXPECT_THROW(validate(json::parse(R"({"terms":[{"mu":[1],"c":"x"}]})"), Schema::HeckeElement), SchemaError);
  EXPECT_THROW(validate(json::array(), Schema::HeckeElement), SchemaError);
}

TEST(JsonIo, TorusCharacterRoundTrip) {
  GenuineTorusCharacter s{{SmoothCharacterFx::make(G5, 1, 2), SmoothCharacterFx::make(G5, 3, 0)}, SquareClass::upi()};
  const auto j = to_json(s);
  EXPECT_EQ(j.dump(), R"({"xi":[[1,2],[3,0]],"psi_class":"upi"})");
  EXPECT_NO_THROW(validate(j, Schema::Character));
  const auto back = torus_character_from_json(j, G5);
  EXPECT_TRUE(genuine_equal(s, back, F5));
  EXPECT_EQ(back.psi_class, s.psi_class);
  EXPECT_EQ(torus_character_from_json(json::parse(R"({"xi":[[0,0]]})"), G5).psi_class, SquareClass::one());
}

TEST(JsonIo, DatumRoundTrip) {
  SupersingularDatum d;
  d.levi = ParabolicSubset::of(3, {1});
  d.flags = {{3, false}};
  d.label = "rho";
  const auto j = to_json(d);
  EXPECT_EQ(j.dump(), R"({"levi":[1],"flags":{"3":false},"label":"rho"})");
  const auto back = datum_from_json(j, 3, G5);
  EXPECT_EQ(back.levi, d.levi);
  EXPECT_EQ(back.flags, d.flags);
  EXPECT_EQ(back.label, d.label);
  EXPECT_TRUE(data_equivalent(d, back, F5));

  const auto torus = torus_datum({{SmoothCharacterFx::trivial(G5), SmoothCharacterFx::trivial(G5)}, SquareClass::u()});
  const auto tb = datum_from_json(to_json(torus), 2, G5);
  ASSERT_TRUE(tb.torus_character.has_value());
  EXPECT_TRUE(data_equivalent(torus, tb, F5));
  EXPECT_EQ(tb.flags, torus.flags);
}

TEST(JsonIo, TripleListSchema) {
  const auto G = ValueGroup::make_default(F5);
  const auto fs = composition_factors(torus_datum({std::vector<SmoothCharacterFx>(3, SmoothCharacterFx::trivial(G)), {}}));
  json arr = json::array();
  for (const auto& t : fs) arr.push_back(to_json(t));
  EXPECT_NO_THROW(validate(arr, Schema::TripleList));
  EXPECT_EQ(arr[0].begin().key(), "P");
  arr[0]["sigma"].erase("label");
  EXPECT_THROW(validate(arr, Schema::TripleList), SchemaError);
}

TEST(JsonIo, OtherSchemas) {
  CosetCountResult r;
  r.mu = Cocharacter({-1});
  r.raw_count = 2;
  r.count_mod_p = -1;
  EXPECT_NO_THROW(validate(to_json(r), Schema::CountRow));
  EXPECT_THROW(validate(json::parse(R"({"mu":[-1],"raw":2})"), Schema::CountRow), SchemaError);
  const QRestrictedWeight w(Character({1, 0}), 3);
  const auto wj = to_json(w);
  EXPECT_EQ(wj.dump(), R"({"nu":[1,0],"q":3,"levi":[2]})");
  EXPECT_NO_THROW(validate(wj, Schema::Weight));
  EXPECT_EQ(to_json(levi_shape(ParabolicSubset::of(3, {1, 3}))).dump(), R"({"gl_blocks":[2],"sp_rank":1})");
  EXPECT_THROW(validate(json::array(), Schema::Object), SchemaError);
}

TEST(JsonIo, MalformedInputsRaiseSchemaErrors) {
  const char* bad[] = {
      R"([])",
      R"({"xi":[]})",
      R"({"xi":[[1]]})",
      R"({"xi":[[0,0],[0,0]],"psi_class":"v"})",
      R"({"xi":[[0,0]]})",
      R"({"levi":[4]})",
      R"({"levi":[1],"flags":{"x":true}})",
      R"({"levi":[1],"flags":{"3":"yes"}})",
      R"({"levi":[],"flags":{"1":true,"2":true,"3":true}})",
      R"({"levi":[1],"flags":{"2":true,"3":false}})",
      R"({"flags":{}})",
  };
  for (const char* text : bad) EXPECT_THROW(datum_from_json(json::parse(text), 3, G5), SchemaError) << text;
  EXPECT_THROW(parabolic_from_json(json::parse(R"([0])"), 2), SchemaError);
  EXPECT_THROW(parabolic_from_json(json::parse(R"(["1"])"), 2), SchemaError);
}
