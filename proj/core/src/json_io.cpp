#include "metasp/json_io.hpp"

namespace metasp {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw SchemaError(msg);
}

bool is_int_array(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (!x.is_number_integer()) return false;
  return true;
}

}  // namespace

json to_json(const ParabolicSubset& J) { return J.indices(); }

json to_json(const SmoothCharacterFx& c) { return json::array({c.unit_exp, c.pi_val}); }

json to_json(const GenuineTorusCharacter& s) {
  json xi = json::array();
  for (const auto& c : s.xi) xi.push_back(to_json(c));
  return {{"xi", xi}, {"psi_class", to_string(s.psi_class)}};
}

json to_json(const QRestrictedWeight& w) {
  return {{"nu", w.nu().coords}, {"q", w.q()}, {"levi", to_json(pi_nu(w))}};
}

json to_json(const TorusHeckeElement& h) {
  json terms = json::array();
  for (const auto& [mu, c] : h.terms()) terms.push_back({{"mu", mu.coords}, {"c", c}});
  return {{"terms", terms}};
}

json to_json(const SupersingularDatum& d) {
  json flags = json::object();
  for (const auto& [a, f] : d.flags) flags[std::to_string(a)] = f;
  json j = {{"levi", to_json(d.levi)}, {"flags", flags}, {"label", d.label}};
  if (d.torus_character) j["torus_character"] = to_json(*d.torus_character);
  return j;
}

json to_json(const SupersingularTriple& t) {
  return {{"P", to_json(t.P)}, {"Q", to_json(t.Q)}, {"sigma", to_json(t.sigma)}};
}

json to_json(const CosetCountResult& r) {
  return {{"mu", r.mu.coords}, {"raw", r.raw_count}, {"mod_p", r.count_mod_p},
          {"depth", r.depth_used}, {"stabilized", r.stabilized}};
}

json to_json(const LeviShape& s) { return {{"gl_blocks", s.gl_blocks}, {"sp_rank", s.sp_rank}}; }

ParabolicSubset parabolic_from_json(const json& j, int n) {
  require(is_int_array(j), "parabolic subset must be an integer array");
  std::vector<int> idx;
  for (const auto& x : j) {
    int i = x.get<int>();
    require(i >= 1 && i <= n, "simple root index out of range");
    idx.push_back(i);
  }
  return ParabolicSubset::of(n, idx);
}

GenuineTorusCharacter torus_character_from_json(const json& j, const ValueGroup& G) {
  require(j.is_object() && j.contains("xi") && j["xi"].is_array(), "torus character needs an \"xi\" array");
  GenuineTorusCharacter s;
  for (const auto& c : j["xi"]) {
    require(is_int_array(c) && c.size() == 2, "each xi entry is [unit_exp, pi_val]");
    s.xi.push_back(SmoothCharacterFx::make(G, c[0].get<long long>(), c[1].get<long long>()));
  }
  require(!s.xi.empty(), "xi must be nonempty");
  std::string cls = "1";
  if (j.contains("psi_class")) {
    require(j["psi_class"].is_string(), "psi_class must be a string");
    cls = j["psi_class"].get<std::string>();
  }
  try {
    s.psi_class = SquareClass::parse(cls);
  } catch (const std::exception& e) {
    throw SchemaError(e.what());
  }
  return s;
}

SupersingularDatum datum_from_json(const json& j, int n, const ValueGroup& G) {
  require(j.is_object(), "datum must be an object");
  if (j.contains("xi")) {
    auto s = torus_character_from_json(j, G);
    require(s.rank() == n, "torus character rank does not match n");
    return torus_datum(s, j.value("label", std::string("torus")));
  }
  require(j.contains("levi"), "datum needs \"levi\"");
  SupersingularDatum d;
  d.levi = parabolic_from_json(j["levi"], n);
  if (j.contains("flags")) {
    require(j["flags"].is_object(), "flags must be an object");
    for (const auto& [k, v] : j["flags"].items()) {
      require(v.is_boolean(), "flag values must be booleans");
      int a = 0;
      try {
        a = std::stoi(k);
      } catch (const std::exception&) {
        throw SchemaError("flag keys must be simple root indices");
      }
      d.flags[a] = v.get<bool>();
    }
  }
  if (j.contains("torus_character")) {
    auto s = torus_character_from_json(j["torus_character"], G);
    require(s.rank() == n, "torus character rank does not match n");
    d.torus_character = s;
  }
  d.label = j.value("label", std::string("sigma"));
  try {
    validate_datum(d);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  return d;
}

void validate(const json& j, Schema s) {
  switch (s) {
    case Schema::HeckeElement:
      require(j.is_object() && j.contains("terms") && j["terms"].is_array(), "hecke element needs \"terms\"");
      for (const auto& t : j["terms"])
        require(t.is_object() && t.size() == 2 && is_int_array(t.value("mu", json())) &&
                    t.contains("c") && t["c"].is_number_integer(),
                "hecke term is {mu: int[], c: int}");
      return;
    case Schema::TripleList:
      require(j.is_array(), "triple list must be an array");
      for (const auto& t : j) {
        require(t.is_object() && is_int_array(t.value("P", json())) && is_int_array(t.value("Q", json())),
                "triple needs integer arrays P and Q");
        require(t.contains("sigma") && t["sigma"].is_object(), "triple needs sigma");
        const auto& sg = t["sigma"];
        require(is_int_array(sg.value("levi", json())), "sigma.levi must be an integer array");
        require(sg.contains("flags") && sg["flags"].is_object(), "sigma.flags must be an object");
        require(sg.contains("label") && sg["label"].is_string(), "sigma.label must be a string");
        if (sg.contains("torus_character")) validate(sg["torus_character"], Schema::Character);
      }
      return;
    case Schema::CountRow:
      require(j.is_object() && is_int_array(j.value("mu", json())) && j.contains("raw") &&
                  j["raw"].is_number_integer() && j.contains("mod_p") && j["mod_p"].is_number_integer(),
              "count row is {mu, raw, mod_p}");
      return;
    case Schema::Character:
      require(j.is_object() && j.contains("xi") && j["xi"].is_array(), "character needs xi");
      for (const auto& c : j["xi"]) require(is_int_array(c) && c.size() == 2, "xi entries are pairs");
      require(j.contains("psi_class") && j["psi_class"].is_string(), "character needs psi_class");
      return;
    case Schema::Weight:
      require(j.is_object() && is_int_array(j.value("nu", json())) && j.contains("q") &&
                  j["q"].is_number_integer() && is_int_array(j.value("levi", json())),
              "weight is {nu, q, levi}");
      return;
    case Schema::Object:
      require(j.is_object(), "output must be a JSON object");
      return;
  }
}

}  // namespace metasp
