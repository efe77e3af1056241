#pragma once

#include "homspace/groupmodel.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace homspace {

/// A group spec document:
///   {"semisimple":[{"family":"D","rank":4}], "torus_rank":1,
///    "gluing":[{"center":[1,0],"torus":["1/2"]}], "unipotent_dim":0,
///    "preset":null, "name":"..."}
/// Simple types may also be written as strings ("D4"). A non-null "preset"
/// replaces the explicit fields; "name" is kept either way.
struct GroupSpec {
  std::optional<std::string> name;
  std::optional<std::string> preset;
  std::vector<SimpleType> semisimple;
  std::size_t torus_rank = 0;
  std::vector<GluingElement> gluing;
  std::size_t unipotent_dim = 0;
};

/// Throws Error with a JSON path in where() (codes "schema", "malformed_json",
/// "malformed_fraction", "unknown_preset", "invalid_rank").
GroupSpec parse_spec(std::string_view text);
/// Builds and validates the model. Throws Error.
ReductiveModel to_model(const GroupSpec& spec);
ReductiveModel parse_model(std::string_view text);

/// The explicit spec document of a model, as canonical JSON text.
std::string expand_model(const ReductiveModel& h, int indent = 2);

} // namespace homspace
