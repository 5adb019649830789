#include "cohint/document.hpp"

#include <charconv>

namespace cohint {

namespace {

IntMatrix matrix(int n, std::initializer_list<Integer> entries) {
  IntMatrix m(n, n);
  auto it = entries.begin();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = *it++;
  return m;
}

void add(WeightMultiset& ws, std::initializer_list<Integer> alpha, int mult = 1) { ws.add(Weight(alpha), mult); }

// Group data: Weyl generators acting on characters and the weights of g.
InputDocument group_data(const std::string& group) {
  InputDocument d;
  if (group == "sl2") {
    d.rank = 1;
    d.weyl_generators = {matrix(1, {-1})};
    add(d.g_weights, {0});
    add(d.g_weights, {2});
    add(d.g_weights, {-2});
  } else if (group == "gl2") {
    d.rank = 2;
    d.weyl_generators = {matrix(2, {0, 1, 1, 0})};
    add(d.g_weights, {0, 0}, 2);
    add(d.g_weights, {1, -1});
    add(d.g_weights, {-1, 1});
  } else if (group == "sl3") {
    // Fundamental-weight coordinates; simple roots (2,-1) and (-1,2).
    d.rank = 2;
    d.weyl_generators = {matrix(2, {-1, 0, 1, 1}), matrix(2, {1, 1, 0, -1})};
    add(d.g_weights, {0, 0}, 2);
    for (auto [a, b] : {std::pair<Integer, Integer>{2, -1}, {-1, 2}, {1, 1}}) {
      add(d.g_weights, {a, b});
      add(d.g_weights, {-a, -b});
    }
  } else if (group == "gl3") {
    d.rank = 3;
    d.weyl_generators = {matrix(3, {0, 1, 0, 1, 0, 0, 0, 0, 1}), matrix(3, {1, 0, 0, 0, 0, 1, 0, 1, 0})};
    add(d.g_weights, {0, 0, 0}, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        IntVector v = IntVector::Zero(3);
        v(i) = 1;
        v(j) = -1;
        d.g_weights.add(Weight(v));
      }
  } else {
    throw InputError("unknown group \"" + group + "\" (expected sl2, gl2, sl3 or gl3)");
  }
  return d;
}

int parameter(const std::string& key, const std::string& text, int min) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < min)
    throw InputError("catalog key \"" + key + "\" needs an integer parameter >= " + std::to_string(min));
  return value;
}

}  // namespace

InputDocument catalog_emit(const std::string& key) {
  const auto colon = key.find(':');
  const std::string head = key.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : key.substr(colon + 1);
  InputDocument d;
  if (head == "torus2-cotangent" && arg.empty()) {
    d.rank = 2;
    add(d.g_weights, {0, 0}, 2);
    for (auto w : {Weight{1, 0}, Weight{0, 1}, Weight{-1, 0}, Weight{0, -1}}) d.v_weights.add(w);
  } else if (head == "gl2-cotangent") {
    const int g = arg.empty() ? 1 : parameter(key, arg, 1);
    d = group_data("gl2");
    for (auto w : {Weight{1, 0}, Weight{0, 1}, Weight{-1, 0}, Weight{0, -1}}) d.v_weights.add(w, g);
  } else if (head == "sl2-irrep") {
    const int dim = parameter(key, arg, 1);
    d = group_data("sl2");
    for (int k = dim - 1; k >= -(dim - 1); k -= 2) add(d.v_weights, {k});
  } else if (head == "sl2-adjoint") {
    const int g = parameter(key, arg, 1);
    d = group_data("sl2");
    for (Integer k : {2, 0, -2}) add(d.v_weights, {k}, g);
  } else if (head == "trivial" && !arg.empty()) {
    d = group_data(arg);
  } else if (head == "adjoint" && !arg.empty()) {
    d = group_data(arg);
    d.v_weights = d.g_weights;
  } else {
    throw InputError("unknown catalog key \"" + key + "\"");
  }
  d.name = key;
  return d;
}

std::vector<std::string> catalog_keys() {
  std::vector<std::string> keys{"torus2-cotangent", "gl2-cotangent"};
  for (int g = 2; g <= 3; ++g) keys.push_back("gl2-cotangent:" + std::to_string(g));
  for (int d = 2; d <= 8; ++d) keys.push_back("sl2-irrep:" + std::to_string(d));
  for (int g = 1; g <= 3; ++g) keys.push_back("sl2-adjoint:" + std::to_string(g));
  for (const char* grp : {"sl2", "gl2", "sl3", "gl3"}) keys.push_back(std::string("trivial:") + grp);
  for (const char* grp : {"sl2", "gl2", "sl3", "gl3"}) keys.push_back(std::string("adjoint:") + grp);
  return keys;
}

}  // namespace cohint
