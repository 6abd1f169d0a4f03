#include "lieforge/json_io.hpp"

#include <cmath>
#include <string>

namespace lieforge {

namespace {

json scalar(CScalar z) { return json::array({z.real(), z.imag()}); }

CScalar scalar_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("complex entry must be a [re, im] pair of numbers");
  const CScalar z{j[0].get<double>(), j[1].get<double>()};
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw ParseError("non-finite matrix entry");
  return z;
}

json tensor3(const std::vector<double>& v, std::size_t m) {
  json out = json::array();
  for (std::size_t a = 0; a < m; ++a) {
    json plane = json::array();
    for (std::size_t b = 0; b < m; ++b) {
      json row = json::array();
      for (std::size_t c = 0; c < m; ++c) row.push_back(v[(a * m + b) * m + c]);
      plane.push_back(std::move(row));
    }
    out.push_back(std::move(plane));
  }
  return out;
}

}  // namespace

json to_json(const CMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(scalar(m(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"dim", m.dim()}, {"entries", std::move(rows)}};
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) throw ParseError("matrix needs 'dim' and 'entries'");
  if (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0) throw ParseError("'dim' must be a positive integer");
  const auto n = j["dim"].get<std::size_t>();
  const auto& rows = j["entries"];
  if (!rows.is_array() || rows.size() != n) throw ParseError("'entries' must have dim rows");
  CMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n) throw ParseError("matrix row " + std::to_string(r) + " has wrong length");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = scalar_from(rows[r][c]);
  }
  return m;
}

json to_json(const GeneratorSet& s) {
  json members = json::array();
  for (const auto& m : s.members()) members.push_back(to_json(m));
  return json{{"rep", std::string(to_string(s.rep().tag))},
              {"kind", std::string(to_string(s.kind()))},
              {"members", std::move(members)}};
}

GeneratorSet generator_set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rep") || !j.contains("kind") || !j.contains("members"))
    throw ParseError("generator set needs 'rep', 'kind' and 'members'");
  if (!j["members"].is_array() || j["members"].empty()) throw ParseError("'members' must be a non-empty array");
  std::vector<CMatrix> members;
  for (const auto& m : j["members"]) members.push_back(matrix_from_json(m));
  const RepTag tag = rep_tag_from_string(j["rep"].get<std::string>());
  const RepLabel label = RepLabel::make(tag, members.front().dim());
  return GeneratorSet(label,
                      generator_kind_from_string(j["kind"].get<std::string>()), std::move(members));
}

json to_json(const CoeffTensor& t) {
  json values = json::array();
  for (int mu = 1; mu <= 4; ++mu) {
    json per_i = json::array();
    for (int i = 1; i <= 3; ++i) {
      json per_nu = json::array();
      for (int nu = 1; nu <= 4; ++nu) per_nu.push_back(scalar(t(mu, i, nu)));
      per_i.push_back(std::move(per_nu));
    }
    values.push_back(std::move(per_i));
  }
  return json{{"source_kind", std::string(to_string(t.source()))},
              {"blocks", std::string(to_string(t.blocks()))},
              {"values", std::move(values)}};
}

json to_json(const CheckReport& r) {
  json witness = nullptr;
  if (r.witness) witness = json{{"indices", r.witness->indices}, {"description", r.witness->description}};
  json out{{"identity", std::string(to_string(r.identity))},
           {"label", r.label},
           {"max_residual", r.max_residual},
           {"tolerance", r.tolerance},
           {"passed", r.passed},
           {"witness", std::move(witness)}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

CheckReport report_from_json(const json& j) {
  try {
    std::optional<Witness> w;
    if (j.contains("witness") && !j["witness"].is_null())
      w = Witness{j["witness"].at("indices").get<std::vector<int>>(), j["witness"].at("description").get<std::string>()};
    CheckReport r = CheckReport::make(identity_from_string(j.at("identity").get<std::string>()),
                                      j.value("label", std::string{}), j.at("max_residual").get<double>(),
                                      j.at("tolerance").get<double>(), w, j.value("note", std::string{}));
    if (r.passed != j.at("passed").get<bool>()) throw ParseError("report 'passed' disagrees with residual/tolerance");
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

json to_json(const StructureTensors& st) {
  return json{{"n", st.n},
              {"count", st.count},
              {"f", tensor3(st.f, st.count)},
              {"d", tensor3(st.d, st.count)},
              {"delta_coeff", st.delta_coeff},
              {"commutator_residual", st.commutator_residual},
              {"anticommutator_residual", st.anticommutator_residual}};
}

json to_json(const ObstructionReport& r) {
  return json{{"n", r.n},
              {"max_abs_d", r.max_abs_d},
              {"argmax", r.argmax},
              {"delta_coeff", r.delta_coeff},
              {"obstructed", r.obstructed},
              {"statement", r.statement}};
}

}  // namespace lieforge
