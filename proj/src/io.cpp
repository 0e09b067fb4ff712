#include "pstab/io.hpp"

#include <set>

namespace pstab {

namespace {

void check_keys(const Json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) fail(Errc::BadValue, "expected an object", where);
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      fail(Errc::UnknownKey, "unknown key '" + it.key() + "'", where);
}

const Json& need(const Json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(Errc::MissingKey, "missing key '" + key + "'", where);
  return *it;
}

long long need_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(Errc::BadValue, "expected an integer", where);
  return j.get<long long>();
}

}  // namespace

Scalar parse_scalar_json(const Json& j, Field f, const std::string& where) {
  if (!j.is_string()) fail(Errc::MalformedScalar, "scalar must be a string", where);
  try {
    return Scalar::parse(j.get<std::string>(), f);
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), where);
  }
}

Matrix parse_matrix_json(const Json& j, Field f, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(Errc::BadValue, "matrix must be a nonempty array of rows", where);
  std::vector<std::vector<Scalar>> rows;
  size_t width = 0;
  for (size_t i = 0; i < j.size(); ++i) {
    const Json& row = j[i];
    std::string rw = where + "[" + std::to_string(i) + "]";
    if (!row.is_array() || row.empty()) fail(Errc::BadValue, "matrix row must be a nonempty array", rw);
    if (i == 0) width = row.size();
    if (row.size() != width) fail(Errc::SizeMismatch, "ragged matrix rows", rw);
    std::vector<Scalar> out;
    for (size_t c = 0; c < row.size(); ++c)
      out.push_back(parse_scalar_json(row[c], f, rw + "[" + std::to_string(c) + "]"));
    rows.push_back(std::move(out));
  }
  if (rows.size() != width) fail(Errc::NotSquare, "matrix is not square", where);
  return Matrix::from_rows(rows);
}

GroupPoint parse_group_point_json(const Json& j, Field f, const std::string& where) {
  check_keys(j, {"group", "kind", "matrices"}, where);
  const Json& group = need(j, "group", where);
  check_keys(group, {"type", "n"}, where + ".group");
  const Json& type = need(group, "type", where + ".group");
  if (!type.is_string()) fail(Errc::BadValue, "group type must be a string", where + ".group.type");
  std::string type_s = type.get<std::string>();
  Group g;
  if (type_s == "GL") g = Group::GL;
  else if (type_s == "SL") g = Group::SL;
  else fail(Errc::BadValue, "group type must be GL or SL", where + ".group.type");
  long long n = need_int(need(group, "n", where + ".group"), where + ".group.n");
  if (n < 1) fail(Errc::BadValue, "n must be positive", where + ".group.n");

  const Json& kind = need(j, "kind", where);
  if (!kind.is_string()) fail(Errc::BadValue, "kind must be a string", where + ".kind");
  std::string kind_s = kind.get<std::string>();
  Kind k;
  if (kind_s == "group") k = Kind::GroupTuple;
  else if (kind_s == "lie") k = Kind::LieTuple;
  else fail(Errc::BadValue, "kind must be 'group' or 'lie'", where + ".kind");

  const Json& mats = need(j, "matrices", where);
  if (!mats.is_array() || mats.empty())
    fail(Errc::BadValue, "matrices must be a nonempty array", where + ".matrices");
  std::vector<Matrix> parsed;
  for (size_t i = 0; i < mats.size(); ++i) {
    std::string mw = where + ".matrices[" + std::to_string(i) + "]";
    Matrix m = parse_matrix_json(mats[i], f, mw);
    if (m.n() != static_cast<size_t>(n)) fail(Errc::SizeMismatch, "matrix size differs from group n", mw);
    parsed.push_back(std::move(m));
  }
  try {
    return GroupPoint(g, k, std::move(parsed));
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), where + (e.where().empty() ? "" : "." + e.where()));
  }
}

Cochar parse_cochar_json(const Json& j, Field f, size_t n, const std::string& where) {
  check_keys(j, {"weights", "conjugator"}, where);
  const Json& w = need(j, "weights", where);
  if (!w.is_array() || w.empty()) fail(Errc::BadValue, "weights must be a nonempty array", where + ".weights");
  std::vector<long long> weights;
  for (size_t i = 0; i < w.size(); ++i)
    weights.push_back(need_int(w[i], where + ".weights[" + std::to_string(i) + "]"));
  if (n != 0 && weights.size() != n)
    fail(Errc::SizeMismatch, "weight count does not match tuple size", where + ".weights");
  Matrix h = j.contains("conjugator")
                 ? parse_matrix_json(j["conjugator"], f, where + ".conjugator")
                 : Matrix::identity(weights.size(), f);
  try {
    return Cochar(std::move(weights), std::move(h));
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), where);
  }
}

RepPresentation parse_presentation_json(const Json& j, const std::string& where) {
  check_keys(j, {"generators", "relators"}, where);
  RepPresentation p;
  long long gens = need_int(need(j, "generators", where), where + ".generators");
  if (gens < 1) fail(Errc::BadValue, "generator count must be positive", where + ".generators");
  p.n_generators = static_cast<size_t>(gens);
  const Json& rel = need(j, "relators", where);
  if (!rel.is_array()) fail(Errc::BadValue, "relators must be an array", where + ".relators");
  for (size_t i = 0; i < rel.size(); ++i) {
    std::string rw = where + ".relators[" + std::to_string(i) + "]";
    if (!rel[i].is_array()) fail(Errc::BadValue, "relator must be an array of signed indices", rw);
    std::vector<int> word;
    for (size_t k = 0; k < rel[i].size(); ++k) {
      long long v = need_int(rel[i][k], rw + "[" + std::to_string(k) + "]");
      if (v == 0 || v > gens || v < -gens)
        fail(Errc::BadValue, "relator letter out of range", rw + "[" + std::to_string(k) + "]");
      word.push_back(static_cast<int>(v));
    }
    p.relators.push_back(std::move(word));
  }
  return p;
}

// ---------------------------------------------------------------------------

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json subspace_to_json(const Subspace& s) {
  Json rows = Json::array();
  for (size_t i = 0; i < s.basis().rows(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < s.ambient(); ++j) row.push_back(s.basis().at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json flag_to_json(const Flag& f) {
  Json steps = Json::array();
  for (const auto& s : f.steps()) steps.push_back(subspace_to_json(s));
  return steps;
}

Json cochar_to_json(const Cochar& c) {
  Json j;
  j["weights"] = c.weights();
  if (!c.conjugator().is_identity()) j["conjugator"] = matrix_to_json(c.conjugator());
  return j;
}

Json group_point_to_json(const GroupPoint& x) {
  Json j;
  j["group"] = Json{{"type", std::string(group_name(x.group()))}, {"n", x.n()}};
  j["kind"] = std::string(kind_name(x.kind()));
  Json mats = Json::array();
  for (const auto& m : x.mats()) mats.push_back(matrix_to_json(m));
  j["matrices"] = std::move(mats);
  return j;
}

Json algebra_to_json(const AlgebraData& a, Group group) {
  Json j;
  j["dim"] = a.dim;
  j["radical_dim"] = a.radical_dim;
  j["commutant_dim"] = a.commutant_dim;
  j["irreducible"] = is_irreducible(a);
  j["completely_reducible"] = is_completely_reducible(a);
  j["isotropic"] = is_isotropic(a, group);
  return j;
}

Json witness_to_json(const DestabWitness& w) {
  Json j;
  j["cochar"] = cochar_to_json(w.cochar);
  j["limit"] = group_point_to_json(w.limit);
  j["limit_in_orbit"] = w.limit_in_orbit;
  j["flag"] = flag_to_json(w.flag);
  return j;
}

Json report_to_json(const ClassificationReport& r) {
  Json j;
  j["flags"] = Json{{"irreducible", r.irreducible},
                    {"completely_reducible", r.completely_reducible},
                    {"isotropic", r.isotropic}};
  j["labels"] = Json{{"polystable", r.polystable}, {"stable", r.stable}, {"equicentral", r.equicentral}};
  j["dims"] = Json{{"algebra_dim", r.dims.algebra_dim},
                   {"radical_dim", r.dims.radical_dim},
                   {"commutant_dim", r.dims.commutant_dim},
                   {"stabilizer_dim", r.dims.stabilizer_dim}};
  j["witness"] = r.witness ? witness_to_json(*r.witness) : Json(nullptr);
  j["notes"] = r.notes;
  return j;
}

Json orbit_to_json(const OrbitDecision& d) {
  Json j;
  j["in_orbit"] = d.in_orbit;
  j["witness_conjugator"] = d.witness ? matrix_to_json(*d.witness) : Json(nullptr);
  j["sl_scaling"] = d.sl_scaling;
  j["used_random"] = d.used_random;
  j["seed"] = d.seed;
  return j;
}

Json hm_to_json(const HmReport& r) {
  Json j;
  j["bound"] = r.bound;
  j["seed"] = r.seed;
  j["classification"] = report_to_json(r.base);
  j["sampled"] = r.sampled;
  Json lambdas = Json::array();
  for (const auto& l : r.lambdas) {
    Json e;
    e["cochar"] = cochar_to_json(l.cochar);
    e["central"] = l.central;
    e["limit_in_orbit"] = l.limit_in_orbit;
    e["opposite_fixes_limit"] = l.opposite_fixes_limit;
    lambdas.push_back(std::move(e));
  }
  j["lambdas"] = std::move(lambdas);
  j["violations"] = r.violations;
  j["consistent"] = r.consistent;
  return j;
}

Json happrox_to_json(const HApproxReport& r) {
  Json j;
  j["upper_dim"] = r.upper_dim;
  j["lower_dim"] = r.lower_dim;
  j["sampled"] = r.sampled;
  Json flags = Json::array();
  for (const auto& s : r.flag_subspaces) flags.push_back(subspace_to_json(s));
  j["flag_subspaces"] = std::move(flags);
  Json members = Json::array();
  for (const auto& [m, ok] : r.members)
    members.push_back(Json{{"matrix", matrix_to_json(m)}, {"in_stabilizer", ok}});
  j["members"] = std::move(members);
  j["words_contained"] = r.words_contained;
  j["notes"] = r.notes;
  return j;
}

Json rep_report_to_json(const RepReport& r) {
  Json j;
  j["valid"] = true;
  j["labels"] = Json{{"reductive", r.reductive}, {"irreducible", r.irreducible}, {"good", r.good}};
  j["classification"] = report_to_json(r.classification);
  j["notes"] = r.notes;
  return j;
}

}  // namespace pstab
