#pragma once

#include "cohint/lattice.hpp"
#include "cohint/weyl.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cohint {

using Json = nlohmann::ordered_json;

struct InputOptions {
  std::optional<int> max_degree;
  std::size_t group_cap = kDefaultGroupCap;
};

struct InputDocument {
  std::string name;
  int rank = 0;
  std::vector<IntMatrix> weyl_generators;
  WeightMultiset g_weights;
  WeightMultiset v_weights;
  InputOptions options;
  std::vector<std::string> warnings;  // filled by parse_input

  GroupData group() const { return GroupData{name, rank, weyl_generators, g_weights}; }
  RepresentationData rep() const { return RepresentationData{v_weights}; }
};

/// Parses and validates everything except weak symmetry, which computation
/// commands check. Throws InputError with a JSON-pointer location.
InputDocument parse_input(const std::string& text);
InputDocument parse_input(const Json& j);

Json to_json(const InputDocument& doc);
Json to_json(const WeightMultiset& ws);
Json to_json(const IntMatrix& m);
Json to_json(const IntVector& v);

/// Known keys: torus2-cotangent, gl2-cotangent[:g], sl2-irrep:d, sl2-adjoint:g,
/// trivial:<group>, adjoint:<group> with <group> one of sl2, gl2, sl3, gl3.
InputDocument catalog_emit(const std::string& key);

/// Representative keys, with parameters instantiated, in a fixed order.
std::vector<std::string> catalog_keys();

}  // namespace cohint
