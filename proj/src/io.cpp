#include "qisg/io.hpp"

#include <nlohmann/json.hpp>

#include <functional>
#include <sstream>

namespace qisg {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) throw StructureError(path + "/" + key, "missing field");
  return *it;
}

std::vector<std::string> string_list(const json& j, const std::string& path) {
  if (!j.is_array()) throw StructureError(path, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw StructureError(path, "expected an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::vector<std::vector<int>> int_table(const json& j, const std::string& path) {
  if (!j.is_array()) throw StructureError(path, "expected a table (array of arrays)");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw StructureError(path, "expected a table (array of arrays)");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw StructureError(path, "table entries must be integers");
      r.push_back(v.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<int> int_list(const json& j, const std::string& path) {
  if (!j.is_array()) throw StructureError(path, "expected an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw StructureError(path, "expected an array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

Rational scalar(const json& j, const std::string& path) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
  } catch (const std::exception& e) {
    throw StructureError(path, e.what());
  }
  throw StructureError(path, "scalars must be strings like \"p/q\" or integers");
}

std::optional<int> opt_int(const json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_number_integer()) throw StructureError(path + "/" + key, "expected an integer or null");
  return it->get<int>();
}

// sparse map entries [idx..., "c"] into a matrix whose column layout the
// caller fixes
Mat sparse_map(const json& j, Eigen::Index rows, Eigen::Index cols, int index_arity,
               const std::function<std::pair<Eigen::Index, Eigen::Index>(const std::vector<long>&)>& place,
               const std::string& path) {
  if (!j.is_array()) throw StructureError(path, "expected an array of sparse entries");
  Mat m(rows, cols);
  m.setZero();
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto& entry = j[k];
    std::string epath = path + "[" + std::to_string(k) + "]";
    if (!entry.is_array() || static_cast<int>(entry.size()) != index_arity + 1)
      throw StructureError(epath, "expected [indices..., coefficient]");
    std::vector<long> idx;
    for (int t = 0; t < index_arity; ++t) {
      if (!entry[static_cast<std::size_t>(t)].is_number_integer()) throw StructureError(epath, "indices must be integers");
      idx.push_back(entry[static_cast<std::size_t>(t)].get<long>());
    }
    auto [r, c] = place(idx);
    if (r < 0 || r >= rows || c < 0 || c >= cols) throw StructureError(epath, "index out of range");
    m(r, c) = scalar(entry[static_cast<std::size_t>(index_arity)], epath);
  }
  return m;
}

FinSemigroup parse_semigroup(const json& j, const std::string& path) {
  auto elems = string_list(field(j, "elements", path), path + "/elements");
  auto table = int_table(field(j, "table", path), path + "/table");
  try {
    return FinSemigroup(std::move(elems), std::move(table), opt_int(j, "unit", path), opt_int(j, "zero", path));
  } catch (const std::exception& e) {
    throw StructureError(path, e.what());
  }
}

FinGroupoid parse_groupoid(const json& j, const std::string& path) {
  FinGroupoid g;
  g.objects = string_list(field(j, "objects", path), path + "/objects");
  g.arrows = string_list(field(j, "arrows", path), path + "/arrows");
  g.src = int_list(field(j, "src", path), path + "/src");
  g.tgt = int_list(field(j, "tgt", path), path + "/tgt");
  g.inv = int_list(field(j, "inv", path), path + "/inv");
  g.unit = int_list(field(j, "unit", path), path + "/unit");
  g.comp = int_table(field(j, "compose", path), path + "/compose");
  auto check = validate_groupoid(g);
  if (!check.ok) throw StructureError(path, check.message);
  return g;
}

FinAlgebra parse_algebra(const json& j, const std::string& path) {
  auto basis = string_list(field(j, "basis", path), path + "/basis");
  BasedSpace space{basis};
  const Eigen::Index d = space.dim();
  Mat m = sparse_map(
      field(j, "products", path), d, d * d, 3,
      [d](const std::vector<long>& idx) {
        return std::make_pair(static_cast<Eigen::Index>(idx[2]), static_cast<Eigen::Index>(idx[0]) * d + idx[1]);
      },
      path + "/products");
  std::optional<Vec> unit;
  if (auto it = j.find("unit"); it != j.end() && !it->is_null()) {
    if (!it->is_array() || static_cast<Eigen::Index>(it->size()) != d)
      throw StructureError(path + "/unit", "expected a coefficient vector of length dim");
    Vec u(d);
    for (Eigen::Index i = 0; i < d; ++i) u(i) = scalar((*it)[static_cast<std::size_t>(i)], path + "/unit");
    unit = u;
  }
  try {
    return FinAlgebra(space, LinMap(tensor(space, space), space, std::move(m)), unit);
  } catch (const std::exception& e) {
    throw StructureError(path, e.what());
  }
}

Qisg parse_qisg(const json& j, const std::string& path) {
  FinAlgebra H = parse_algebra(field(j, "algebra", path), path + "/algebra");
  const Eigen::Index d = H.dim();
  Mat cm = sparse_map(
      field(j, "comult", path), d * d, d, 3,
      [d](const std::vector<long>& idx) {
        return std::make_pair(static_cast<Eigen::Index>(idx[1]) * d + idx[2], static_cast<Eigen::Index>(idx[0]));
      },
      path + "/comult");
  Mat sm = sparse_map(
      field(j, "antipode", path), d, d, 2,
      [](const std::vector<long>& idx) {
        return std::make_pair(static_cast<Eigen::Index>(idx[1]), static_cast<Eigen::Index>(idx[0]));
      },
      path + "/antipode");
  std::optional<LinMap> counit;
  if (auto it = j.find("counit"); it != j.end() && !it->is_null()) {
    Mat em = sparse_map(
        *it, 1, d, 1,
        [](const std::vector<long>& idx) { return std::make_pair(static_cast<Eigen::Index>(0), static_cast<Eigen::Index>(idx[0])); },
        path + "/counit");
    counit = LinMap(H.space(), BasedSpace({"1"}), std::move(em));
  }
  try {
    FinCoalgebra C(H.space(), LinMap(H.space(), tensor(H.space(), H.space()), std::move(cm)), counit);
    LinMap antipode(H.space(), H.space(), std::move(sm));
    bool unital = H.unit().has_value();
    bool counital = counit.has_value();
    return Qisg{std::move(H), std::move(C), std::move(antipode), unital, counital};
  } catch (const std::exception& e) {
    throw StructureError(path, e.what());
  }
}

HopfAlgebroid parse_algebroid(const json& j, const std::string& path) {
  HopfAlgebroid x;
  std::string mode = field(j, "mode", path).get<std::string>();
  if (mode == "commutative")
    x.mode = AlgebroidMode::commutative;
  else if (mode == "restricted")
    x.mode = AlgebroidMode::restricted_noncommutative;
  else
    throw StructureError(path + "/mode", "expected \"commutative\" or \"restricted\"");
  x.name = j.value("name", "file");
  auto points = string_list(field(j, "base_points", path), path + "/base_points");
  try {
    x.A = fun_algebra(points);
    x.H = parse_algebra(field(j, "algebra", path), path + "/algebra");
  } catch (const StructureError&) {
    throw;
  } catch (const std::exception& e) {
    throw StructureError(path, e.what());
  }
  const Eigen::Index d = x.H.dim(), da = x.A.alg.dim();
  auto vecmap = [&](const char* key, Eigen::Index rows, Eigen::Index cols) {
    return sparse_map(
        field(j, key, path), rows, cols, 2,
        [](const std::vector<long>& idx) {
          return std::make_pair(static_cast<Eigen::Index>(idx[1]), static_cast<Eigen::Index>(idx[0]));
        },
        path + "/" + key);
  };
  auto liftmap = [&](const json& src, const std::string& p) {
    return sparse_map(
        src, d * d, d, 3,
        [d](const std::vector<long>& idx) {
          return std::make_pair(static_cast<Eigen::Index>(idx[1]) * d + idx[2], static_cast<Eigen::Index>(idx[0]));
        },
        p);
  };
  try {
    x.s = LinMap(x.A.alg.space(), x.H.space(), vecmap("source", d, da));
    x.t = LinMap(x.A.alg.space(), x.H.space(), vecmap("target", d, da));
    x.comult_l = LinMap(x.H.space(), tensor(x.H.space(), x.H.space()), liftmap(field(j, "comult_l", path), path + "/comult_l"));
    if (auto it = j.find("comult_r"); it != j.end() && !it->is_null())
      x.comult_r = LinMap(x.H.space(), tensor(x.H.space(), x.H.space()), liftmap(*it, path + "/comult_r"));
    else
      x.comult_r = x.comult_l;
    x.counit_l = LinMap(x.H.space(), x.A.alg.space(), vecmap("counit_l", da, d));
    if (auto it = j.find("counit_r"); it != j.end() && !it->is_null()) {
      Mat em = sparse_map(
          *it, da, d, 2,
          [](const std::vector<long>& idx) {
            return std::make_pair(static_cast<Eigen::Index>(idx[1]), static_cast<Eigen::Index>(idx[0]));
          },
          path + "/counit_r");
      x.counit_r = LinMap(x.H.space(), x.A.alg.space(), std::move(em));
    } else {
      x.counit_r = x.counit_l;
    }
    x.antipode = LinMap(x.H.space(), x.H.space(), vecmap("antipode", d, d));
    x.refresh_balancing();
  } catch (const StructureError&) {
    throw;
  } catch (const std::exception& e) {
    throw StructureError(path, e.what());
  }
  return x;
}

json sparse_of_matrix_2(const Mat& m, bool col_first) {
  json out = json::array();
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) {
        if (col_first)
          out.push_back(json::array({c, r, m(r, c).str()}));
        else
          out.push_back(json::array({r, c, m(r, c).str()}));
      }
  return out;
}

}  // namespace

StructureFile parse_structure(const json& j) {
  if (!j.is_object()) throw StructureError("$", "structure files are JSON objects");
  std::string kind = field(j, "kind", "$").get<std::string>();
  StructureFile out;
  out.kind = kind;
  if (kind == "semigroup")
    out.value = parse_semigroup(j, "$");
  else if (kind == "groupoid")
    out.value = parse_groupoid(j, "$");
  else if (kind == "algebra")
    out.value = parse_algebra(j, "$");
  else if (kind == "qisg")
    out.value = parse_qisg(j, "$");
  else if (kind == "algebroid")
    out.value = parse_algebroid(j, "$");
  else
    throw StructureError("$/kind", "unknown kind '" + kind + "'");
  return out;
}

StructureFile parse_structure_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw StructureError("$ (byte " + std::to_string(e.byte) + ")", e.what());
  }
  return parse_structure(j);
}

json serialize(const FinSemigroup& s) {
  json j;
  j["kind"] = "semigroup";
  j["elements"] = s.elems;
  j["table"] = s.table;
  j["unit"] = s.unit ? json(*s.unit) : json(nullptr);
  j["zero"] = s.zero ? json(*s.zero) : json(nullptr);
  return j;
}

json serialize(const FinGroupoid& g) {
  json j;
  j["kind"] = "groupoid";
  j["objects"] = g.objects;
  j["arrows"] = g.arrows;
  j["src"] = g.src;
  j["tgt"] = g.tgt;
  j["inv"] = g.inv;
  j["unit"] = g.unit;
  j["compose"] = g.comp;
  return j;
}

namespace {

json algebra_body(const FinAlgebra& a) {
  json j;
  j["basis"] = a.space().labels();
  json prods = json::array();
  const Eigen::Index d = a.dim();
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index jj = 0; jj < d; ++jj)
      for (auto& [k, c] : a.basis_product(static_cast<int>(i), static_cast<int>(jj)))
        prods.push_back(json::array({i, jj, k, c.str()}));
  j["products"] = prods;
  if (a.unit()) {
    json u = json::array();
    for (Eigen::Index i = 0; i < d; ++i) u.push_back((*a.unit())(i).str());
    j["unit"] = u;
  } else {
    j["unit"] = nullptr;
  }
  return j;
}

json lift_body(const LinMap& lift) {
  const Eigen::Index d = lift.dom.dim();
  json out = json::array();
  for (Eigen::Index b = 0; b < d; ++b)
    for (Eigen::Index k = 0; k < d * d; ++k)
      if (!lift.m(k, b).is_zero()) out.push_back(json::array({b, k / d, k % d, lift.m(k, b).str()}));
  return out;
}

}  // namespace

json serialize(const FinAlgebra& a) {
  json j = algebra_body(a);
  j["kind"] = "algebra";
  return j;
}

json serialize(const Qisg& q) {
  json j;
  j["kind"] = "qisg";
  j["algebra"] = algebra_body(q.H);
  j["comult"] = lift_body(q.C.comult());
  j["antipode"] = sparse_of_matrix_2(q.antipode.m, /*col_first=*/true);
  if (q.C.counit()) {
    json e = json::array();
    for (Eigen::Index b = 0; b < q.H.dim(); ++b)
      if (!q.C.counit()->m(0, b).is_zero()) e.push_back(json::array({b, q.C.counit()->m(0, b).str()}));
    j["counit"] = e;
  } else {
    j["counit"] = nullptr;
  }
  return j;
}

json serialize(const HopfAlgebroid& x) {
  json j;
  j["kind"] = "algebroid";
  j["mode"] = x.mode == AlgebroidMode::commutative ? "commutative" : "restricted";
  j["name"] = x.name;
  j["base_points"] = x.A.points();
  j["algebra"] = algebra_body(x.H);
  j["source"] = sparse_of_matrix_2(x.s.m, true);
  j["target"] = sparse_of_matrix_2(x.t.m, true);
  j["comult_l"] = lift_body(x.comult_l);
  j["comult_r"] = exact_equal(x.comult_l.m, x.comult_r.m) ? json(nullptr) : lift_body(x.comult_r);
  j["counit_l"] = sparse_of_matrix_2(x.counit_l.m, true);
  j["counit_r"] = exact_equal(x.counit_l.m, x.counit_r.m) ? json(nullptr) : sparse_of_matrix_2(x.counit_r.m, true);
  j["antipode"] = sparse_of_matrix_2(x.antipode.m, true);
  return j;
}

json serialize_structure(const StructureFile& f) {
  return std::visit([](const auto& v) { return serialize(v); }, f.value);
}

HopfAlgebroid model_from_json(const json& j) {
  std::string name = field(j, "name", "$/model").get<std::string>();
  int points = j.value("points", 2);
  std::string group = j.value("group", "Z1");
  if (name == "pair") return pair_algebroid(fun_algebra(points));
  if (name == "repfun") return repfun_transitive_algebroid(points, parse_group(group));
  if (name == "weakhopf") return weakhopf_algebroid(product_groupoid(points, parse_group(group)));
  throw StructureError("$/model/name", "unknown model '" + name + "' (pair | repfun | weakhopf)");
}

BrtDescriptor parse_biretraction_descriptor(const json& j, const HopfAlgebroid& model) {
  if (field(j, "kind", "$").get<std::string>() != "biretraction")
    throw StructureError("$/kind", "expected kind 'biretraction'");
  const Eigen::Index d = model.H.dim(), da = model.A.alg.dim();
  Mat m = sparse_map(
      field(j, "alpha", "$"), da, d, 2,
      [](const std::vector<long>& idx) {
        return std::make_pair(static_cast<Eigen::Index>(idx[1]), static_cast<Eigen::Index>(idx[0]));
      },
      "$/alpha");
  return BrtDescriptor{field(j, "model", "$"), LinMap(model.H.space(), model.A.alg.space(), std::move(m))};
}

json model_json(const json& j) { return field(j, "model", "$"); }

json serialize_biretraction(const json& model, const Biretraction& b) {
  json j;
  j["kind"] = "biretraction";
  j["model"] = model;
  j["alpha"] = sparse_of_matrix_2(b.alpha.m, true);
  json e = json::array();
  for (Eigen::Index i = 0; i < b.e.size(); ++i)
    if (!b.e(i).is_zero()) e.push_back(i);
  j["witness_support"] = e;
  return j;
}

json report_json(const Report& rep, const std::string& command) {
  json j;
  j["command"] = command;
  j["title"] = rep.title;
  j["ok"] = rep.ok();
  json counts = json::object();
  for (auto& [k, v] : rep.counts) counts[k] = v;
  j["counts"] = counts;
  json checks = json::array();
  for (const auto& it : rep.items) {
    json c;
    c["name"] = it.name;
    c["pass"] = it.pass;
    c["required"] = it.required;
    c["witness"] = it.witness;
    checks.push_back(c);
  }
  j["checks"] = checks;
  return j;
}

std::string report_text(const Report& rep, double elapsed_ms) {
  std::ostringstream os;
  os << rep.title << "\n";
  for (auto& [k, v] : rep.counts) os << "  " << k << " = " << v << "\n";
  for (const auto& it : rep.items) {
    os << "  [" << (it.pass ? "PASS" : "FAIL") << "] " << it.name;
    if (!it.required) os << " (informational)";
    if (!it.pass && !it.witness.empty()) os << " -- " << it.witness;
    os << "\n";
  }
  os << (rep.ok() ? "OK" : "FAILED") << " (" << elapsed_ms << " ms)\n";
  return os.str();
}

}  // namespace qisg
