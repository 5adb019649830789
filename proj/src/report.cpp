#include "cohint/report.hpp"

#include <sstream>

namespace cohint {

Json rational_json(const Rational& q) {
  if (denominator(q) == 1) return Json(numerator(q).convert_to<long long>());
  return Json(q.str());
}

namespace {

Json series_json(const std::vector<Rational>& s) {
  Json out = Json::array();
  for (const auto& c : s) out.push_back(rational_json(c));
  return out;
}

Json rat_matrix_json(const RatMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(rational_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

int resolve_max_degree(const RunOptions& o, const InputDocument& doc, const Analysis& a) {
  if (o.max_degree) return *o.max_degree;
  if (doc.options.max_degree) return *doc.options.max_degree;
  return a.default_max_degree();
}

}  // namespace

Json strata_section(const Analysis& a) {
  const Stratification& st = a.strat();
  Json strata = Json::array();
  for (const auto& s : st.strata) {
    strata.push_back(Json{{"index", s.index},
                          {"flat_dim", s.flat.dim()},
                          {"flat_basis", to_json(s.flat.basis)},
                          {"zero_v_size", s.zero_v.total()},
                          {"zero_g_size", s.zero_g.total()},
                          {"representative", to_json(s.rep.coords)},
                          {"dim_V_fixed", s.dims.dim_V_fixed},
                          {"dim_G_fixed", s.dims.dim_G_fixed},
                          {"d_lambda", s.dims.d_lambda},
                          {"r_lambda", s.dims.r_lambda},
                          {"orbit", st.orbit_of[s.index]},
                          {"W_lower_order", st.w_lower[s.index].order()},
                          {"W_upper_order", st.w_upper[s.index].order()}});
  }
  Json orbits = Json::array();
  for (std::size_t o = 0; o < st.orbits.size(); ++o)
    orbits.push_back(Json{{"id", o}, {"representative", st.orbit_representative(o)}, {"members", st.orbits[o]}});
  Json order = Json::array();
  for (std::size_t i = 0; i < st.strata.size(); ++i)
    for (std::size_t j = 0; j < st.strata.size(); ++j)
      if (i != j && st.order[i][j]) order.push_back(Json::array({i, j}));
  return Json{{"weyl_order", a.weyl().order()},
              {"stratum_count", st.strata.size()},
              {"orbit_count", st.orbits.size()},
              {"top", st.top},
              {"strata", strata},
              {"orbits", orbits},
              {"strict_order", order}};
}

Json bps_section(Analysis& a, std::optional<int> orbit) {
  const Stratification& st = a.strat();
  if (orbit && (*orbit < 0 || *orbit >= static_cast<int>(st.orbits.size())))
    throw InputError("--orbit " + std::to_string(*orbit) + " is out of range");
  Json out = Json::array();
  for (std::size_t o = 0; o < st.orbits.size(); ++o) {
    if (orbit && static_cast<int>(o) != *orbit) continue;
    const std::size_t lam = st.orbit_representative(o);
    const Stratum& s = st.strata[lam];
    const BpsSpace& bps = a.bps(lam);
    const EpsilonCharacter& eps = a.eps(lam);
    Json pieces = Json::array();
    for (int p = 0; p <= bps.max_degree; ++p) {
      const GradedBasis& piece = bps.pieces[static_cast<std::size_t>(p)];
      Json basis = Json::array();
      for (const Poly& f : piece.polys()) basis.push_back(f.str());
      pieces.push_back(Json{{"p", p},
                            {"shifted_degree", 2 * p - s.dims.d_lambda},
                            {"dim", piece.dim()},
                            {"ambient_dim", bps.ambient_dims[static_cast<std::size_t>(p)]},
                            {"j_dim", bps.j_dims[static_cast<std::size_t>(p)]},
                            {"basis", basis}});
    }
    Json dt = Json::array();
    for (const auto& [i, d] : bps.dt_table) dt.push_back(Json{{"i", i}, {"dim", d}});
    Json eps_table = Json::array();
    for (const auto& [w, v] : eps.values) {
      Json mats = Json::array();
      for (const auto& m : bps.w_matrices.at(w)) mats.push_back(rat_matrix_json(m));
      eps_table.push_back(Json{{"element", w}, {"matrix", to_json(a.weyl()[w].matrix)}, {"epsilon", v}, {"bps_action", mats}});
    }
    out.push_back(Json{{"orbit", o},
                       {"stratum", lam},
                       {"representative", to_json(s.rep.coords)},
                       {"d_lambda", s.dims.d_lambda},
                       {"r_lambda", s.dims.r_lambda},
                       {"total_dim", bps.total_dim()},
                       {"polynomial_degrees", pieces},
                       {"dt_table", dt},
                       {"euler", bps.euler},
                       {"epsilon", eps_table}});
  }
  return out;
}

Json verify_section(Analysis& a, int max_degree, bool& pass) {
  const HilbertLedger h = verify_hilbert(a, max_degree);
  const IsomorphismLedger iso = verify_isomorphism(a, max_degree);
  const AssociativityLedger assoc = verify_associativity(a);
  Json hl = Json::array();
  for (const auto& l : h.lines)
    hl.push_back(Json{{"degree", l.degree}, {"target", rational_json(l.target)}, {"assembled", rational_json(l.assembled)}, {"ok", l.ok}});
  Json il = Json::array();
  for (const auto& l : iso.lines)
    il.push_back(Json{{"degree", l.degree}, {"target_dim", l.target_dim}, {"assembled", l.assembled}, {"rank", l.rank}, {"ok", l.ok}});
  Json failures = Json::array();
  for (const auto& s : assoc.samples)
    if (!s.ok)
      failures.push_back(Json{{"chain", {s.s1, s.s2, s.s3}},
                              {"aligned", to_json(s.aligned.coords)},
                              {"f", s.f.str()},
                              {"direct", s.direct.str()},
                              {"composed", s.composed.str()}});
  std::size_t chains = 0;
  for (std::size_t i = 0; i < assoc.samples.size(); ++i) {
    const auto& s = assoc.samples[i];
    if (i == 0 || s.s1 != assoc.samples[i - 1].s1 || s.s2 != assoc.samples[i - 1].s2 || s.s3 != assoc.samples[i - 1].s3) ++chains;
  }
  pass = h.pass && iso.pass && assoc.pass;
  return Json{{"max_degree", max_degree},
              {"hilbert", Json{{"pass", h.pass}, {"lines", hl}}},
              {"isomorphism", Json{{"pass", iso.pass}, {"lines", il}}},
              {"associativity", Json{{"pass", assoc.pass}, {"chains", chains}, {"samples", assoc.samples.size()}, {"failures", failures}}}};
}

RunResult run(const RunOptions& o) {
  RunResult r;
  r.report = Json{{"command", o.command}};
  try {
    if (o.command == "catalog" && !o.catalog_key && !o.input_text) {
      r.report["keys"] = catalog_keys();
      r.report["status"] = "ok";
      return r;
    }
    if (o.input_text && o.catalog_key) throw InputError("give either --input or --catalog, not both");
    if (!o.input_text && !o.catalog_key) throw InputError("an input is required: --input FILE or --catalog KEY");
    InputDocument doc = o.input_text ? parse_input(*o.input_text) : parse_input(to_json(catalog_emit(*o.catalog_key)));
    if (o.group_cap) {
      doc.options.group_cap = *o.group_cap;
      WeylGroup::enumerate(doc.rank, doc.weyl_generators, doc.options.group_cap);
    }

    if (o.command == "catalog") {
      r.report["document"] = to_json(doc);
      r.report["status"] = "ok";
      return r;
    }
    const SymmetryClass cls = symmetry_class(doc.rep());
    r.report["input"] = to_json(doc);
    r.report["symmetry_class"] = to_string(cls);
    r.report["warnings"] = doc.warnings;
    if (o.command == "validate") {
      r.report["weyl_order"] = WeylGroup::enumerate(doc.rank, doc.weyl_generators, doc.options.group_cap).order();
      r.report["status"] = cls == SymmetryClass::NotWeaklySymmetric ? "invalid" : "ok";
      r.exit_code = cls == SymmetryClass::NotWeaklySymmetric ? kExitInvalid : kExitOk;
      return r;
    }
    if (o.command != "strata" && o.command != "bps" && o.command != "verify" && o.command != "molien")
      throw InputError("unknown command \"" + o.command + "\"");
    if (cls == SymmetryClass::NotWeaklySymmetric) throw InputError("representation is not weakly symmetric");

    Analysis a(doc.group(), doc.rep(), doc.options.group_cap);
    const int max_degree = resolve_max_degree(o, doc, a);
    if (o.command == "strata") {
      r.report["strata"] = strata_section(a);
    } else if (o.command == "bps") {
      r.report["bps"] = bps_section(a, o.orbit);
    } else if (o.command == "molien") {
      r.report["max_degree"] = max_degree;
      r.report["target_series"] = series_json(target_series(a.weyl(), max_degree));
    } else {
      bool pass = false;
      r.report["strata"] = strata_section(a);
      r.report["bps"] = bps_section(a, std::nullopt);
      r.report["verify"] = verify_section(a, max_degree, pass);
      if (!pass) {
        r.report["status"] = "mismatch";
        r.exit_code = kExitMismatch;
        return r;
      }
    }
    r.report["status"] = "ok";
  } catch (const InputError& e) {
    r.report["status"] = "invalid";
    r.report["error"] = e.what();
    r.exit_code = kExitInvalid;
  } catch (const InternalError& e) {
    r.report["status"] = "internal error";
    r.report["error"] = e.what();
    r.exit_code = kExitInternal;
  }
  return r;
}

namespace {

bool is_scalar_list(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (e.is_structured() && !is_scalar_list(e)) return false;
  return true;
}

void render(const Json& j, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive() || is_scalar_list(v)) {
        os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      } else {
        os << pad << k << ":\n";
        render(v, indent + 2, os);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_primitive() || is_scalar_list(v)) {
        os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      } else {
        os << pad << "-\n";
        render(v, indent + 2, os);
      }
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  render(report, 0, os);
  return os.str();
}

}  // namespace cohint
