#include "homspace/spec_io.hpp"

#include "homspace/error.hpp"

#include <json.hpp>

#include <set>

namespace homspace {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& where, const std::string& msg) { throw Error("schema", msg, where); }

void only_keys(const json& obj, const std::set<std::string>& allowed, const std::string& at) {
  for (const auto& [key, _] : obj.items())
    if (!allowed.count(key)) schema_error(at + "/" + key, "unknown key '" + key + "'");
}

std::size_t count_field(const json& v, const std::string& at, std::size_t max) {
  if (!v.is_number_integer()) schema_error(at, "expected a non-negative integer");
  if (v.get<long long>() < 0) schema_error(at, "must be >= 0, got " + std::to_string(v.get<long long>()));
  if (v.get<long long>() > static_cast<long long>(max)) schema_error(at, "must be <= " + std::to_string(max));
  return static_cast<std::size_t>(v.get<long long>());
}

SimpleType simple_type(const json& v, const std::string& at) {
  try {
    if (v.is_string()) return SimpleType::parse(v.get<std::string>());
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), at);
  }
  if (!v.is_object()) schema_error(at, "expected {\"family\":..., \"rank\":...} or a type literal such as \"D4\"");
  only_keys(v, {"family", "rank"}, at);
  if (!v.contains("family") || !v["family"].is_string() || v["family"].get<std::string>().size() != 1)
    schema_error(at + "/family", "expected one of \"A\"..\"G\"");
  if (!v.contains("rank") || !v["rank"].is_number_integer()) schema_error(at + "/rank", "expected an integer");
  try {
    return SimpleType::make(v["family"].get<std::string>()[0], v["rank"].get<long long>());
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), at + "/rank");
  }
}

GluingElement gluing_element(const json& v, const std::string& at) {
  if (!v.is_object()) schema_error(at, "expected {\"center\":[...], \"torus\":[...]}");
  only_keys(v, {"center", "torus"}, at);
  GluingElement g;
  if (v.contains("center")) {
    if (!v["center"].is_array()) schema_error(at + "/center", "expected an array of integers");
    for (std::size_t i = 0; i < v["center"].size(); ++i) {
      const json& c = v["center"][i];
      if (!c.is_number_integer()) schema_error(at + "/center/" + std::to_string(i), "expected an integer");
      g.center.emplace_back(c.get<long long>());
    }
  }
  if (v.contains("torus")) {
    if (!v["torus"].is_array()) schema_error(at + "/torus", "expected an array of fractions");
    for (std::size_t i = 0; i < v["torus"].size(); ++i) {
      const json& t = v["torus"][i];
      const std::string here = at + "/torus/" + std::to_string(i);
      if (t.is_number_integer())
        g.torus.emplace_back(Integer(t.get<long long>()));
      else if (t.is_string())
        g.torus.push_back(Fraction::parse(t.get<std::string>(), here));
      else
        schema_error(here, "expected a fraction string such as \"1/2\"");
    }
  }
  return g;
}

} // namespace

GroupSpec parse_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("malformed_json", e.what(), "/");
  }
  if (!doc.is_object()) schema_error("/", "spec must be a JSON object");
  only_keys(doc, {"semisimple", "torus_rank", "gluing", "unipotent_dim", "preset", "name"}, "");

  GroupSpec s;
  if (doc.contains("name") && !doc["name"].is_null()) {
    if (!doc["name"].is_string()) schema_error("/name", "expected a string");
    s.name = doc["name"].get<std::string>();
  }
  if (doc.contains("preset") && !doc["preset"].is_null()) {
    if (!doc["preset"].is_string()) schema_error("/preset", "expected a string or null");
    s.preset = doc["preset"].get<std::string>();
  }
  if (doc.contains("semisimple")) {
    if (!doc["semisimple"].is_array()) schema_error("/semisimple", "expected an array");
    for (std::size_t i = 0; i < doc["semisimple"].size(); ++i)
      s.semisimple.push_back(simple_type(doc["semisimple"][i], "/semisimple/" + std::to_string(i)));
  }
  if (doc.contains("torus_rank")) s.torus_rank = count_field(doc["torus_rank"], "/torus_rank", 64);
  if (doc.contains("unipotent_dim")) s.unipotent_dim = count_field(doc["unipotent_dim"], "/unipotent_dim", 1000000);
  if (doc.contains("gluing")) {
    if (!doc["gluing"].is_array()) schema_error("/gluing", "expected an array");
    for (std::size_t i = 0; i < doc["gluing"].size(); ++i)
      s.gluing.push_back(gluing_element(doc["gluing"][i], "/gluing/" + std::to_string(i)));
  }
  return s;
}

ReductiveModel to_model(const GroupSpec& spec) {
  ReductiveModel h;
  if (spec.preset) {
    try {
      h = preset(*spec.preset);
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), "/preset");
    }
  } else {
    h.ss = RootDatum(spec.semisimple);
    h.torus_rank = spec.torus_rank;
    h.gluing = spec.gluing;
    h.unipotent_dim = spec.unipotent_dim;
  }
  if (spec.name) h.name = *spec.name;
  validate(h);
  for (auto& g : h.gluing) g.center = h.ss.center().reduce(g.center);
  return h;
}

ReductiveModel parse_model(std::string_view text) { return to_model(parse_spec(text)); }

std::string expand_model(const ReductiveModel& h, int indent) {
  json doc;
  doc["name"] = h.name.empty() ? json(nullptr) : json(h.name);
  doc["semisimple"] = json::array();
  for (const auto& t : h.ss.factors()) doc["semisimple"].push_back({{"family", std::string(1, t.family_letter())}, {"rank", t.rank}});
  doc["torus_rank"] = h.torus_rank;
  doc["gluing"] = json::array();
  for (const auto& g : h.gluing) {
    json c = json::array(), t = json::array();
    for (const auto& x : g.center) c.push_back(x.convert_to<long long>());
    for (const auto& f : g.torus) t.push_back(f.mod1().to_string());
    doc["gluing"].push_back({{"center", c}, {"torus", t}});
  }
  doc["unipotent_dim"] = h.unipotent_dim;
  doc["preset"] = nullptr;
  return doc.dump(indent);
}

} // namespace homspace
