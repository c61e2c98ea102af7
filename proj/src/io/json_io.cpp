#include "aci3/io/json_io.hpp"

#include <fstream>

#include "aci3/error.hpp"

namespace aci3::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::vector<int> int_list(const json& j, const std::string& what) {
  if (!j.is_array()) fail(what + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail(what + " must contain integers");
    out.push_back(v.get<int>());
  }
  return out;
}

Exponent exponent_from_json(const json& j) {
  const auto v = int_list(j, "exponent");
  if (v.size() != 3) fail("exponent must have 3 entries");
  return {v[0], v[1], v[2]};
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(path + ": " + e.what());
  }
}

json table_to_json(const BettiTable& b) {
  json f = json::array();
  for (const auto& m : b.modules()) f.push_back(m.shifts());
  json out = {{"codim", b.codim()}, {"F", f}};
  if (!b.is_minimal()) out["minimal"] = false;
  return out;
}

BettiTable table_from_json(const json& j) {
  if (!j.is_object() || !j.contains("F")) fail("table needs an \"F\" array");
  const json& f = j.at("F");
  if (!f.is_array()) fail("\"F\" must be an array");
  std::vector<FreeModuleShifts> mods;
  for (const auto& m : f) mods.emplace_back(int_list(m, "module"));
  int codim = static_cast<int>(mods.size());
  if (j.contains("codim")) {
    if (!j.at("codim").is_number_integer()) fail("\"codim\" must be an integer");
    codim = j.at("codim").get<int>();
  }
  if (codim != static_cast<int>(mods.size())) {
    fail("codim " + std::to_string(codim) + " but " + std::to_string(mods.size()) + " modules");
  }
  Minimality minimality = Minimality::Minimal;
  if (j.contains("minimal")) {
    if (!j.at("minimal").is_boolean()) fail("\"minimal\" must be a boolean");
    if (!j.at("minimal").get<bool>()) minimality = Minimality::NotMinimal;
  }
  return BettiTable(codim, std::move(mods), minimality);
}

json monomial_ideal_to_json(const MonomialIdeal3& ideal) {
  json gens = json::array();
  for (const auto& e : ideal.generators()) gens.push_back(e);
  return {{"gens", gens}};
}

MonomialIdeal3 monomial_ideal_from_json(const json& j) {
  if (!j.is_object() || !j.contains("gens") || !j.at("gens").is_array()) {
    fail("monomial ideal needs a \"gens\" array");
  }
  std::vector<Exponent> gens;
  for (const auto& g : j.at("gens")) gens.push_back(exponent_from_json(g));
  return MonomialIdeal3(std::move(gens));
}

json polynomial_to_json(const oracle::HomogeneousPoly& f) {
  json out = json::array();
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    if (f.coeffs()[k] == 0) continue;
    out.push_back({f.coeffs()[k], oracle::monomial_at(f.degree(), k)});
  }
  return out;
}

oracle::HomogeneousPoly polynomial_from_json(const json& j, const oracle::PrimeField& field) {
  if (!j.is_array() || j.empty()) fail("polynomial must be a non-empty array of terms");
  std::optional<oracle::HomogeneousPoly> out;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer()) {
      fail("term must be [coefficient, [e1, e2, e3]]");
    }
    const Exponent e = exponent_from_json(term[1]);
    if (e[0] < 0 || e[1] < 0 || e[2] < 0) fail("negative exponent");
    const int deg = total_degree(e);
    if (!out) out.emplace(deg);
    if (out->degree() != deg) fail("polynomial is not homogeneous");
    auto& c = out->coeffs()[oracle::monomial_index(e)];
    c = field.add(c, field.from_int(term[0].get<std::int64_t>()));
  }
  return *out;
}

json graded_ideal_to_json(const oracle::GradedIdealFp& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators()) gens.push_back(polynomial_to_json(g));
  return {{"gens", gens}};
}

oracle::GradedIdealFp graded_ideal_from_json(const json& j, const oracle::PrimeField& field,
                                             oracle::OracleLimits limits) {
  if (!j.is_object() || !j.contains("gens") || !j.at("gens").is_array()) {
    fail("ideal needs a \"gens\" array");
  }
  std::vector<oracle::HomogeneousPoly> gens;
  for (const auto& g : j.at("gens")) {
    if (g.is_array() && g.size() == 3 && g[0].is_number_integer()) {
      const Exponent e = exponent_from_json(g);
      if (e[0] < 0 || e[1] < 0 || e[2] < 0) fail("negative exponent");
      gens.push_back(oracle::HomogeneousPoly::monomial(e));
    } else {
      gens.push_back(polynomial_from_json(g, field));
    }
  }
  return oracle::GradedIdealFp(std::move(gens), field, limits);
}

json shape_to_json(const AciShape& shape) {
  return {{"d", shape.d()},   {"dstar", shape.dstar()}, {"s", shape.s()},
          {"t", shape.t()},   {"u", shape.u()},         {"dtotal", shape.dtotal()}};
}

json gorenstein_shape_to_json(const GorensteinShape& shape) {
  return {{"delta", shape.delta.degrees()}, {"theta", shape.theta}};
}

json linked_to_json(const LinkedGorenstein& linked) {
  json out = {{"table", table_to_json(linked.table)},
              {"delta", linked.shape.delta.degrees()},
              {"theta", linked.shape.theta},
              {"ci_type", linked.ci_type},
              {"analogous_case", linked.analogous_case}};
  if (linked.same_betti_witness) out["same_betti_witness"] = table_to_json(*linked.same_betti_witness);
  return out;
}

}  // namespace aci3::io
