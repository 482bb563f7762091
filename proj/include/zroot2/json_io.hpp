#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zroot2/hom.hpp"
#include "zroot2/matrix.hpp"
#include "zroot2/ring.hpp"
#include "zroot2/seqgroup.hpp"
#include "zroot2/snf.hpp"

namespace zroot2 {

// Insertion-ordered JSON keeps reports byte-identical across runs.
using Json = nlohmann::ordered_json;

namespace jsondetail {

inline const Json& field(const Json& j, const std::string& name) {
  if (!j.is_object() || !j.contains(name))
    throw std::invalid_argument("missing field '" + name + "'");
  return j.at(name);
}

inline int degree_field(const Json& j) {
  const Json& d = field(j, "degree");
  if (!d.is_number_integer()) throw std::invalid_argument("field 'degree' must be an integer");
  return d.get<int>();
}

inline Int int_field(const Json& v, const std::string& context) {
  if (v.is_string()) {
    try {
      return int_from_string(v.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("field '" + context + "' is not a decimal integer string");
    }
  }
  if (v.is_number_integer()) return Int(v.get<long>());
  throw std::invalid_argument("field '" + context + "' must be a decimal integer string");
}

inline std::vector<Int> int_vector(const Json& v, const std::string& context) {
  if (!v.is_array()) throw std::invalid_argument("field '" + context + "' must be an array");
  std::vector<Int> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(int_field(v[i], context + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace jsondetail

inline Json to_json(const RingElem& x) {
  Json coeffs = Json::array();
  for (const Int& c : x.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"degree", x.degree()}, {"coeffs", std::move(coeffs)}};
}

inline RingElem ring_elem_from_json(const Json& j) {
  RingParams params(jsondetail::degree_field(j));
  return RingElem(params, jsondetail::int_vector(jsondetail::field(j, "coeffs"), "coeffs"));
}

inline Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"matrix", std::move(rows)}};
}

inline IntMatrix int_matrix_from_json_array(const Json& rows, const std::string& context) {
  if (!rows.is_array()) throw std::invalid_argument("field '" + context + "' must be an array of rows");
  std::vector<std::vector<Int>> grid;
  for (std::size_t r = 0; r < rows.size(); ++r)
    grid.push_back(jsondetail::int_vector(rows[r], context + "[" + std::to_string(r) + "]"));
  const std::size_t nrows = grid.size();
  const std::size_t ncols = nrows == 0 ? 0 : grid[0].size();
  for (std::size_t r = 0; r < nrows; ++r)
    if (grid[r].size() != ncols)
      throw std::invalid_argument("field '" + context + "' is not rectangular");
  IntMatrix m(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < ncols; ++c) m.at(r, c) = std::move(grid[r][c]);
  return m;
}

inline IntMatrix int_matrix_from_json(const Json& j) {
  return int_matrix_from_json_array(jsondetail::field(j, "matrix"), "matrix");
}

inline Json to_json(const GroupHom& h) {
  Json m = to_json(h.matrix());
  return Json{{"degree", h.degree()}, {"matrix", std::move(m.at("matrix"))}};
}

inline GroupHom group_hom_from_json(const Json& j) {
  RingParams params(jsondetail::degree_field(j));
  IntMatrix m = int_matrix_from_json_array(jsondetail::field(j, "matrix"), "matrix");
  return GroupHom(params, std::move(m));
}

inline Json to_json(const FinSeq& s) {
  Json terms = Json::array();
  for (const RingElem& t : s.terms()) {
    Json coeffs = Json::array();
    for (const Int& c : t.coeffs()) coeffs.push_back(to_string(c));
    terms.push_back(std::move(coeffs));
  }
  return Json{{"degree", s.degree()}, {"terms", std::move(terms)}};
}

inline FinSeq fin_seq_from_json(const Json& j) {
  RingParams params(jsondetail::degree_field(j));
  const Json& terms = jsondetail::field(j, "terms");
  if (!terms.is_array()) throw std::invalid_argument("field 'terms' must be an array");
  std::vector<RingElem> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i)
    out.emplace_back(params, jsondetail::int_vector(terms[i], "terms[" + std::to_string(i) + "]"));
  return FinSeq(params, std::move(out));
}

inline Json to_json(const ModuleMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Json coeffs = Json::array();
      for (const Int& v : m.at(r, c).coeffs()) coeffs.push_back(to_string(v));
      row.push_back(std::move(coeffs));
    }
    rows.push_back(std::move(row));
  }
  return Json{{"degree", m.params().degree}, {"entries", std::move(rows)}};
}

inline ModuleMatrix module_matrix_from_json(const Json& j) {
  RingParams params(jsondetail::degree_field(j));
  const Json& rows = jsondetail::field(j, "entries");
  if (!rows.is_array()) throw std::invalid_argument("field 'entries' must be an array of rows");
  const std::size_t nrows = rows.size();
  std::size_t ncols = 0;
  if (nrows > 0) {
    if (!rows[0].is_array()) throw std::invalid_argument("field 'entries[0]' must be an array");
    ncols = rows[0].size();
  }
  ModuleMatrix m(params, nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r) {
    const std::string rc = "entries[" + std::to_string(r) + "]";
    if (!rows[r].is_array() || rows[r].size() != ncols)
      throw std::invalid_argument("field 'entries' is not rectangular at '" + rc + "'");
    for (std::size_t c = 0; c < ncols; ++c) {
      const std::string ec = rc + "[" + std::to_string(c) + "]";
      std::vector<Int> coeffs = jsondetail::int_vector(rows[r][c], ec);
      if (static_cast<int>(coeffs.size()) != params.degree)
        throw std::invalid_argument("field '" + ec + "' must hold " +
                                    std::to_string(params.degree) + " coefficients");
      m.set(r, c, RingElem(params, std::move(coeffs)));
    }
  }
  return m;
}

inline Json to_json(const WitnessInstance& w) {
  Json stages = Json::array();
  for (const WitnessStage& s : w.stages()) {
    Json priors = Json::array();
    for (const GroupHom& p : s.priors) priors.push_back(to_json(p).at("matrix"));
    stages.push_back(Json{{"row", s.row},
                          {"col", s.col},
                          {"diagonal", to_json(s.diagonal).at("matrix")},
                          {"priors", std::move(priors)}});
  }
  Json targets = Json::array();
  for (const Rat& t : w.targets()) targets.push_back(to_string(t));
  return Json{{"degree", w.params().degree}, {"stages", std::move(stages)}, {"targets", std::move(targets)}};
}

inline WitnessInstance witness_instance_from_json(const Json& j) {
  RingParams params(jsondetail::degree_field(j));
  const Json& stages = jsondetail::field(j, "stages");
  if (!stages.is_array()) throw std::invalid_argument("field 'stages' must be an array");
  std::vector<WitnessStage> out;
  for (std::size_t k = 0; k < stages.size(); ++k) {
    const Json& s = stages[k];
    const std::string sc = "stages[" + std::to_string(k) + "]";
    WitnessStage stage{
        jsondetail::field(s, "row").get<std::size_t>(),
        jsondetail::field(s, "col").get<std::size_t>(),
        GroupHom(params, int_matrix_from_json_array(jsondetail::field(s, "diagonal"), sc + ".diagonal")),
        {}};
    const Json& priors = jsondetail::field(s, "priors");
    if (!priors.is_array()) throw std::invalid_argument("field '" + sc + ".priors' must be an array");
    for (std::size_t l = 0; l < priors.size(); ++l)
      stage.priors.emplace_back(
          params, int_matrix_from_json_array(priors[l], sc + ".priors[" + std::to_string(l) + "]"));
    out.push_back(std::move(stage));
  }
  const Json& targets = jsondetail::field(j, "targets");
  if (!targets.is_array()) throw std::invalid_argument("field 'targets' must be an array");
  std::vector<Rat> ts;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const Json& t = targets[i];
    const std::string tc = "targets[" + std::to_string(i) + "]";
    if (t.is_string())
      ts.push_back(rational_from_string(t.get<std::string>()));
    else if (t.is_number_integer())
      ts.push_back(Rat(t.get<long>()));
    else
      throw std::invalid_argument("field '" + tc + "' must be a rational string");
  }
  return WitnessInstance(params, std::move(out), std::move(ts));
}

inline Json to_json(const CokernelStructure& c) {
  Json torsion = Json::array();
  for (const Int& t : c.torsion) torsion.push_back(to_string(t));
  return Json{{"torsion", std::move(torsion)}, {"free_rank", c.free_rank}};
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("file '" + path + "' is not valid JSON: " + e.what());
  }
  return j;
}

}  // namespace zroot2
