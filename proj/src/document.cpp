#include "cohint/document.hpp"

namespace cohint {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError((where.empty() ? std::string("/") : where) + ": " + what);
}

Integer as_integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<Integer>();
}

IntVector as_vector(const Json& j, const std::string& where, int length) {
  if (!j.is_array()) fail(where, "expected an integer list");
  if (static_cast<int>(j.size()) != length) fail(where, "expected " + std::to_string(length) + " entries, got " + std::to_string(j.size()));
  IntVector v(length);
  for (int i = 0; i < length; ++i) v(i) = as_integer(j[static_cast<std::size_t>(i)], where + "/" + std::to_string(i));
  return v;
}

WeightMultiset as_weights(const Json& j, const std::string& where, int rank) {
  if (!j.is_array()) fail(where, "expected a list of {alpha, multiplicity} objects");
  WeightMultiset ws;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    const Json& e = j[i];
    if (!e.is_object() || !e.contains("alpha")) fail(at, "expected an object with an \"alpha\" field");
    const IntVector alpha = as_vector(e["alpha"], at + "/alpha", rank);
    Integer mult = 1;
    if (e.contains("multiplicity")) mult = as_integer(e["multiplicity"], at + "/multiplicity");
    if (mult < 1) fail(at + "/multiplicity", "must be positive");
    ws.add(Weight(alpha), static_cast<int>(mult));
  }
  return ws;
}

}  // namespace

InputDocument parse_input(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_input(j);
}

InputDocument parse_input(const Json& j) {
  if (!j.is_object()) fail("", "expected a JSON object");
  for (const char* key : {"rank", "weyl_generators", "g_weights", "v_weights"})
    if (!j.contains(key)) fail("", std::string("missing field \"") + key + "\"");
  InputDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail("/name", "expected a string");
    doc.name = j["name"].get<std::string>();
  }
  const Integer rank = as_integer(j["rank"], "/rank");
  if (rank < 1 || rank > 16) fail("/rank", "must be between 1 and 16");
  doc.rank = static_cast<int>(rank);

  const Json& gens = j["weyl_generators"];
  if (!gens.is_array()) fail("/weyl_generators", "expected a list of matrices");
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::string at = "/weyl_generators/" + std::to_string(g);
    if (!gens[g].is_array() || static_cast<int>(gens[g].size()) != doc.rank)
      fail(at, "expected " + std::to_string(doc.rank) + " rows");
    IntMatrix m(doc.rank, doc.rank);
    for (int r = 0; r < doc.rank; ++r)
      m.row(r) = as_vector(gens[g][static_cast<std::size_t>(r)], at + "/" + std::to_string(r), doc.rank).transpose();
    doc.weyl_generators.push_back(m);
  }
  doc.g_weights = as_weights(j["g_weights"], "/g_weights", doc.rank);
  doc.v_weights = as_weights(j["v_weights"], "/v_weights", doc.rank);

  if (j.contains("options")) {
    const Json& o = j["options"];
    if (!o.is_object()) fail("/options", "expected an object");
    if (o.contains("max_degree") && !o["max_degree"].is_null()) {
      const Integer d = as_integer(o["max_degree"], "/options/max_degree");
      if (d < 0) fail("/options/max_degree", "must be nonnegative");
      doc.options.max_degree = static_cast<int>(d);
    }
    if (o.contains("group_cap")) {
      const Integer c = as_integer(o["group_cap"], "/options/group_cap");
      if (c < 1) fail("/options/group_cap", "must be positive");
      doc.options.group_cap = static_cast<std::size_t>(c);
    }
  }

  doc.warnings = check_lattice_data(doc.group(), doc.rep());
  WeylGroup::enumerate(doc.rank, doc.weyl_generators, doc.options.group_cap);
  return doc;
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(to_json(IntVector(m.row(i).transpose())));
  return out;
}

Json to_json(const WeightMultiset& ws) {
  Json out = Json::array();
  for (const auto& e : ws.entries()) out.push_back(Json{{"alpha", to_json(e.weight.coords)}, {"multiplicity", e.multiplicity}});
  return out;
}

Json to_json(const InputDocument& doc) {
  Json gens = Json::array();
  for (const auto& m : doc.weyl_generators) gens.push_back(to_json(m));
  Json out{{"name", doc.name},
           {"rank", doc.rank},
           {"weyl_generators", gens},
           {"g_weights", to_json(doc.g_weights)},
           {"v_weights", to_json(doc.v_weights)}};
  Json options = Json::object();
  if (doc.options.max_degree) options["max_degree"] = *doc.options.max_degree;
  options["group_cap"] = doc.options.group_cap;
  out["options"] = options;
  return out;
}

}  // namespace cohint
