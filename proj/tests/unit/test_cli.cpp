#include "cohint/report.hpp"

#include <doctest.h>

using namespace cohint;

namespace {

RunResult run_catalog(const std::string& command, const std::string& key, std::optional<int> max_degree = {}) {
  RunOptions o;
  o.command = command;
  o.catalog_key = key;
  o.max_degree = max_degree;
  return run(o);
}

RunResult run_text(const std::string& command, const std::string& text) {
  RunOptions o;
  o.command = command;
  o.input_text = text;
  return run(o);
}

const char* kRank1 = R"({"rank": 1, "weyl_generators": [], "g_weights": [{"alpha": [0]}],
  "v_weights": [{"alpha": [1]}, {"alpha": [-2]}]})";
const char* kSingle = R"({"rank": 1, "weyl_generators": [], "g_weights": [{"alpha": [0]}], "v_weights": [{"alpha": [1]}]})";

}  // namespace

TEST_CASE("parsing documents") {
  const InputDocument d = parse_input(to_json(catalog_emit("torus2-cotangent")).dump());
  CHECK(d.rank == 2);
  CHECK(d.v_weights.total() == 4);
  CHECK(parse_input(std::string(kSingle)).v_weights.total() == 1);

  CHECK_THROWS_WITH_AS(parse_input(std::string("{")), doctest::Contains("malformed JSON"), InputError);
  CHECK_THROWS_WITH_AS(parse_input(std::string(R"({"rank": 0, "weyl_generators": [], "g_weights": [], "v_weights": []})")),
                       doctest::Contains("/rank"), InputError);
  CHECK_THROWS_WITH_AS(
      parse_input(std::string(R"({"rank": 1, "weyl_generators": [], "g_weights": [{"alpha": [0, 1]}], "v_weights": []})")),
      doctest::Contains("/g_weights/0/alpha"), InputError);
  CHECK_THROWS_AS(parse_input(std::string(R"({"rank": 2, "weyl_generators": [[[1, 1], [1, 1]]],
    "g_weights": [{"alpha": [0, 0], "multiplicity": 2}], "v_weights": []})")),
                  InputError);
  CHECK_THROWS_WITH_AS(parse_input(std::string(R"({"rank": 2, "weyl_generators": [[[1, 1], [0, 1]]],
    "g_weights": [{"alpha": [0, 0], "multiplicity": 2}], "v_weights": []})")),
                       doctest::Contains("group not finite within cap"), InputError);
}

TEST_CASE("documents round-trip through JSON") {
  for (const auto& key : catalog_keys()) {
    const InputDocument d = catalog_emit(key);
    const InputDocument back = parse_input(to_json(d));
    CHECK(back.v_weights == d.v_weights);
    CHECK(back.g_weights == d.g_weights);
    CHECK(to_json(back) == to_json(d));
  }
}

TEST_CASE("catalog data") {
  const InputDocument v4 = catalog_emit("sl2-irrep:4");
  CHECK(v4.rank == 1);
  CHECK(v4.v_weights.support() == std::vector<Weight>{Weight{-3}, Weight{-1}, Weight{1}, Weight{3}});
  CHECK(v4.g_weights.support() == std::vector<Weight>{Weight{-2}, Weight{0}, Weight{2}});
  const InputDocument adj = catalog_emit("adjoint:gl2");
  CHECK(adj.v_weights == adj.g_weights);
  const InputDocument torus = catalog_emit("torus2-cotangent");
  CHECK(torus.weyl_generators.empty());
  CHECK(torus.v_weights.support().size() == 4);
  CHECK(catalog_emit("gl2-cotangent:3").v_weights.multiplicity(Weight{1, 0}) == 3);
  CHECK_THROWS_AS(catalog_emit("sl2-irrep:x"), InputError);
  CHECK_THROWS_AS(catalog_emit("trivial:e8"), InputError);
  CHECK(catalog_keys().size() == 22);
}

TEST_CASE("validate") {
  const RunResult ok = run_text("validate", kRank1);
  CHECK(ok.exit_code == kExitOk);
  CHECK(ok.report["symmetry_class"] == "weakly symmetric");

  const RunResult bad = run_text("validate", kSingle);
  CHECK(bad.exit_code == kExitInvalid);
  CHECK(bad.report["symmetry_class"] == "not weakly symmetric");

  const RunResult strata = run_text("strata", kSingle);
  CHECK(strata.exit_code == kExitInvalid);
  CHECK(strata.report["error"].get<std::string>().find("not weakly symmetric") != std::string::npos);
}

TEST_CASE("strata and bps sections") {
  const RunResult s = run_catalog("strata", "gl2-cotangent");
  CHECK(s.exit_code == kExitOk);
  CHECK(s.report["strata"]["stratum_count"] == 5);
  CHECK(s.report["strata"]["orbit_count"] == 4);
  CHECK(s.report["strata"]["weyl_order"] == 2);

  const RunResult b = run_catalog("bps", "sl2-irrep:5");
  CHECK(b.exit_code == kExitOk);
  bool found = false;
  for (const auto& o : b.report["bps"])
    if (o["representative"] == Json::array({0})) {
      found = true;
      CHECK(o["total_dim"] == 1);
      CHECK(o["dt_table"] == Json::array({Json{{"i", -2}, {"dim", 1}}}));
    }
  CHECK(found);

  RunOptions one;
  one.command = "bps";
  one.catalog_key = "gl2-cotangent";
  one.orbit = 0;
  CHECK(run(one).report["bps"].size() == 1);
  one.orbit = 9;
  CHECK(run(one).exit_code == kExitInvalid);
}

TEST_CASE("verify and molien") {
  const RunResult v = run_catalog("verify", "gl2-cotangent", 6);
  CHECK(v.exit_code == kExitOk);
  CHECK(v.report["status"] == "ok");
  CHECK(v.report["verify"]["hilbert"]["pass"] == true);
  CHECK(v.report["verify"]["isomorphism"]["lines"].size() == 7);

  const RunResult m = run_catalog("molien", "gl2-cotangent", 5);
  CHECK(m.report["target_series"] == Json::array({1, 1, 2, 2, 3, 3}));
  CHECK(render_text(m.report).find("target_series: [1,1,2,2,3,3]") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run_catalog("strata", "nonsense").exit_code == kExitInvalid);
  RunOptions both;
  both.command = "strata";
  both.catalog_key = "gl2-cotangent";
  both.input_text = kRank1;
  CHECK(run(both).exit_code == kExitInvalid);
  RunOptions none;
  none.command = "verify";
  CHECK(run(none).exit_code == kExitInvalid);
  RunOptions capped;
  capped.command = "strata";
  capped.catalog_key = "trivial:gl3";
  capped.group_cap = 3;
  CHECK(run(capped).exit_code == kExitInvalid);
  RunOptions list;
  list.command = "catalog";
  CHECK(run(list).report["keys"].size() == 22);
}

TEST_CASE("reports are deterministic") {
  CHECK(run_catalog("verify", "torus2-cotangent", 4).report.dump() ==
        run_catalog("verify", "torus2-cotangent", 4).report.dump());
}
