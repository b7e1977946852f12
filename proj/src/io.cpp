#include "tcoh/io.hpp"

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "tcoh/ar.hpp"
#include "tcoh/catalog.hpp"
#include "tcoh/errors.hpp"

namespace tcoh {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing \"") + key + "\"");
  return *it;
}

size_t as_index(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<int64_t>() < 0) bad(where, "expected a non-negative integer");
  return j.get<size_t>();
}

Vector vector_from_json(const Field& F, const Json& j, size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) bad(where, "expected an array of " + std::to_string(n) + " scalars");
  Vector v(n);
  for (size_t i = 0; i < n; ++i) v[i] = scalar_from_json(F, j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

// Resolves ref against base when it names a file there.
std::string resolve(const fs::path& base, const std::string& ref) {
  fs::path p(ref);
  if (p.is_absolute() || base.empty()) return ref;
  fs::path q = base / p;
  return fs::exists(q) ? q.string() : ref;
}

// Extends actions given on a few elements to all basis elements, using
// rho(ab) = rho(a) rho(b) (right) or lambda(ab) = lambda(b) lambda(a) (left).
std::vector<Matrix> close_actions(const Algebra& alg, size_t dim, std::vector<std::pair<Vector, Matrix>> known,
                                  bool left, const std::string& where) {
  const Field& F = alg.field();
  size_t n = alg.dim();
  bool has_unit = false;
  for (const auto& [e, m] : known) has_unit = has_unit || e == alg.unit();
  if (!has_unit) known.emplace_back(alg.unit(), Matrix::identity(F, dim));

  std::vector<Vector> elems;
  for (const auto& k : known) elems.push_back(k.first);
  Subspace span = Subspace::span(F, n, elems);
  for (size_t a = 0; a < known.size() && span.dim() < n; ++a) {
    for (size_t b = 0; b <= a && span.dim() < n; ++b) {
      for (int order = 0; order < 2; ++order) {
        const auto& x = order ? known[b] : known[a];
        const auto& y = order ? known[a] : known[b];
        Vector p = alg.multiply(x.first, y.first);
        if (span.contains(p)) continue;
        Matrix act = left ? multiply(F, y.second, x.second) : multiply(F, x.second, y.second);
        known.emplace_back(p, std::move(act));
        span = span.sum(Subspace::span(F, n, {p}));
      }
    }
  }
  if (span.dim() < n) bad(where, "the given actions do not generate the algebra");

  Matrix e(known.size(), n);
  for (size_t i = 0; i < known.size(); ++i) e.set_row(i, known[i].first);
  std::vector<Matrix> acts;
  for (size_t b = 0; b < n; ++b) {
    auto c = solve_left(F, e, unit_vector(n, b));
    Matrix act(dim, dim);
    for (size_t i = 0; i < known.size(); ++i)
      if (!(*c)[i].is_zero()) axpy(F, act, (*c)[i], known[i].second);
    acts.push_back(std::move(act));
  }
  return acts;
}

std::vector<std::pair<Vector, Matrix>> read_actions(const Algebra& alg, const Json& j, size_t dim,
                                                    const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of [basis index, matrix]");
  std::vector<std::pair<Vector, Matrix>> out;
  for (size_t k = 0; k < j.size(); ++k) {
    std::string w = where + "[" + std::to_string(k) + "]";
    const Json& e = j[k];
    if (!e.is_array() || e.size() != 2) bad(w, "expected [basis index, matrix]");
    size_t b = as_index(e[0], w + "[0]");
    if (b >= alg.dim()) bad(w + "[0]", "basis index out of range");
    out.emplace_back(alg.basis_element(b), matrix_from_json(alg.field(), e[1], dim, dim, w + "[1]"));
  }
  return out;
}

std::string algebra_ref_of(const Json& j, const std::string& where) {
  const Json& a = member(j, "algebra", where);
  if (!a.is_string()) bad(where + ".algebra", "expected a path or built-in name");
  return a.get<std::string>();
}

Field optional_field(const Json& j, const std::string& where) {
  return j.contains("field") ? field_from_json(j["field"], where + ".field") : Field::rationals();
}

std::optional<size_t> parse_call(const std::string& ref, const std::string& name) {
  std::smatch m;
  std::regex re(name + "\\((\\d+)\\)");
  if (std::regex_match(ref, m, re)) return std::stoul(m[1]);
  return std::nullopt;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json field_to_json(const Field& F) {
  if (F.is_prime()) return Json{{"Fp", F.characteristic()}};
  return "Q";
}

Field field_from_json(const Json& j, const std::string& where) {
  if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
  if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_integer() && j["Fp"].get<int64_t>() > 1) {
    uint64_t p = j["Fp"].get<uint64_t>();
    if (!is_prime_u64(p)) bad(where, std::to_string(p) + " is not prime");
    return Field::prime(p);
  }
  bad(where, "expected \"Q\" or {\"Fp\": p}");
}

Json scalar_to_json(const Rational& r) { return r.to_string(); }

Rational scalar_from_json(const Field& F, const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return F.embed(Rational(j.get<int64_t>()));
    if (j.is_string()) return F.embed(Rational::parse(j.get<std::string>()));
  } catch (const Error& e) {
    bad(where, e.what());
  }
  bad(where, "expected an exact scalar (integer or \"p/q\" string)");
}

Json vector_to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(scalar_to_json(x));
  return a;
}

Json matrix_to_json(const Matrix& m) {
  Json a = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) a.push_back(vector_to_json(m.row(i)));
  return a;
}

Matrix matrix_from_json(const Field& F, const Json& j, size_t rows, size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows) bad(where, "expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    m.set_row(i, vector_from_json(F, j[i], cols, where + "[" + std::to_string(i) + "]"));
  return m;
}

AlgebraPtr algebra_from_json(const Json& j) {
  const std::string w = "algebra";
  Field F = optional_field(j, w);
  if (j.contains("vertices")) {
    Quiver q;
    const Json& vs = j["vertices"];
    if (!vs.is_array() || vs.empty()) bad(w + ".vertices", "expected a non-empty array");
    for (const auto& v : vs) q.vertices.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    auto vertex = [&](const Json& v, const std::string& where) -> size_t {
      std::string name = v.is_string() ? v.get<std::string>() : v.dump();
      for (size_t i = 0; i < q.vertices.size(); ++i)
        if (q.vertices[i] == name) return i;
      bad(where, "unknown vertex " + name);
    };
    const Json& as = member(j, "arrows", w);
    if (!as.is_array()) bad(w + ".arrows", "expected an array");
    for (size_t k = 0; k < as.size(); ++k) {
      std::string aw = w + ".arrows[" + std::to_string(k) + "]";
      const Json& a = as[k];
      if (!a.is_array() || a.size() != 3 || !a[0].is_string()) bad(aw, "expected [name, source, target]");
      q.arrows.push_back({a[0].get<std::string>(), vertex(a[1], aw + "[1]"), vertex(a[2], aw + "[2]")});
    }
    if (j.contains("relations")) {
      const Json& rs = j["relations"];
      if (!rs.is_array()) bad(w + ".relations", "expected an array");
      for (size_t k = 0; k < rs.size(); ++k) {
        std::string rw = w + ".relations[" + std::to_string(k) + "]";
        if (!rs[k].is_array()) bad(rw, "expected an array of arrow names");
        std::vector<size_t> rel;
        for (const auto& name : rs[k]) {
          size_t idx = q.arrows.size();
          for (size_t a = 0; a < q.arrows.size(); ++a)
            if (name.is_string() && q.arrows[a].name == name.get<std::string>()) idx = a;
          if (idx == q.arrows.size()) bad(rw, "unknown arrow " + name.dump());
          rel.push_back(idx);
        }
        q.relations.push_back(std::move(rel));
      }
    }
    return std::make_shared<const Algebra>(path_algebra(F, q));
  }

  Algebra::Spec spec;
  spec.field = F;
  const Json& basis = member(j, "basis", w);
  if (!basis.is_array()) bad(w + ".basis", "expected an array of names");
  for (const auto& b : basis) spec.basis_names.push_back(b.is_string() ? b.get<std::string>() : b.dump());
  size_t n = spec.basis_names.size();
  spec.unit = vector_from_json(F, member(j, "unit", w), n, w + ".unit");
  const Json& ids = member(j, "idempotents", w);
  if (!ids.is_array()) bad(w + ".idempotents", "expected an array");
  for (size_t k = 0; k < ids.size(); ++k)
    spec.idempotents.push_back(vector_from_json(F, ids[k], n, w + ".idempotents[" + std::to_string(k) + "]"));
  spec.products.assign(n, std::vector<Vector>(n, Vector(n)));
  const Json& mult = member(j, "mult", w);
  if (!mult.is_array()) bad(w + ".mult", "expected an array of [i, j, coords]");
  for (size_t k = 0; k < mult.size(); ++k) {
    std::string mw = w + ".mult[" + std::to_string(k) + "]";
    const Json& e = mult[k];
    if (!e.is_array() || e.size() != 3) bad(mw, "expected [i, j, coords]");
    size_t a = as_index(e[0], mw + "[0]"), b = as_index(e[1], mw + "[1]");
    if (a >= n || b >= n) bad(mw, "basis index out of range");
    spec.products[a][b] = vector_from_json(F, e[2], n, mw + "[2]");
  }
  return std::make_shared<const Algebra>(std::move(spec));
}

Json algebra_to_json(const Algebra& a) {
  Json j;
  j["field"] = field_to_json(a.field());
  j["basis"] = a.basis_names();
  j["unit"] = vector_to_json(a.unit());
  j["idempotents"] = Json::array();
  for (size_t v = 0; v < a.num_vertices(); ++v) j["idempotents"].push_back(vector_to_json(a.idempotent(v)));
  j["mult"] = Json::array();
  for (size_t x = 0; x < a.dim(); ++x)
    for (size_t y = 0; y < a.dim(); ++y)
      if (!is_zero(a.product(x, y))) j["mult"].push_back(Json{x, y, vector_to_json(a.product(x, y))});
  return j;
}

AlgebraPtr load_algebra(const std::string& ref, const Field& F) {
  if (!fs::exists(ref)) {
    std::smatch m;
    if (ref == "k") return field_algebra(F);
    if (ref == "dual-numbers") return dual_numbers(F);
    if (ref == "kronecker") return kronecker(F);
    if (ref == "beilinson") return beilinson_p2(F);
    if (std::regex_match(ref, m, std::regex("A(\\d+)(/rad2)?")) && std::stoul(m[1]) >= 1)
      return linear_quiver(F, std::stoul(m[1]), m[2].matched);
    if (std::regex_match(ref, m, std::regex("semisimple(\\d+)")) && std::stoul(m[1]) >= 1)
      return semisimple_algebra(F, std::stoul(m[1]));
  }
  return algebra_from_json(read_json_file(ref));
}

RightModule module_from_json(AlgebraPtr alg, const Json& j) {
  const std::string w = "module";
  size_t dim = as_index(member(j, "dim", w), w + ".dim");
  auto known = read_actions(*alg, member(j, "action", w), dim, w + ".action");
  RightModule m(alg, dim, close_actions(*alg, dim, std::move(known), false, w + ".action"));
  m.validate();
  return m;
}

Bimodule bimodule_from_json(AlgebraPtr alg, const Json& j) {
  const std::string w = "bimodule";
  size_t dim = as_index(member(j, "dim", w), w + ".dim");
  auto right = close_actions(*alg, dim, read_actions(*alg, member(j, "action", w), dim, w + ".action"), false,
                             w + ".action");
  auto left = close_actions(*alg, dim, read_actions(*alg, member(j, "left_action", w), dim, w + ".left_action"),
                            true, w + ".left_action");
  Bimodule b(alg, dim, std::move(right), std::move(left));
  b.validate();
  return b;
}

Json module_to_json(const RightModule& m, const std::string& algebra_ref) {
  Json j;
  j["algebra"] = algebra_ref;
  j["field"] = field_to_json(m.field());
  j["dim"] = m.dim();
  j["action"] = Json::array();
  for (size_t b = 0; b < m.algebra()->dim(); ++b) j["action"].push_back(Json{b, matrix_to_json(m.action(b))});
  return j;
}

Json bimodule_to_json(const Bimodule& m, const std::string& algebra_ref) {
  Json j = module_to_json(m, algebra_ref);
  j["left_action"] = Json::array();
  for (size_t b = 0; b < m.algebra()->dim(); ++b)
    j["left_action"].push_back(Json{b, matrix_to_json(m.left_action(b))});
  return j;
}

namespace {

template <class T, class Build>
T load_with_algebra(const std::string& path, AlgebraPtr alg, Build build) {
  Json j = read_json_file(path);
  if (!alg) {
    std::string ref = resolve(fs::path(path).parent_path(), algebra_ref_of(j, path));
    alg = load_algebra(ref, optional_field(j, path));
  }
  try {
    return build(alg, j);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace

RightModule load_module(const std::string& path, AlgebraPtr alg) {
  return load_with_algebra<RightModule>(path, alg, module_from_json);
}

Bimodule load_bimodule(const std::string& path, AlgebraPtr alg) {
  return load_with_algebra<Bimodule>(path, alg, bimodule_from_json);
}

Bimodule load_sigma(const std::string& ref, AlgebraPtr alg, size_t gldim_bound) {
  if (!fs::exists(ref)) {
    if (ref == "regular") return regular_bimodule(alg);
    if (ref == "dual") return dual_bimodule(alg);
    if (ref == "top") return quotient_bimodule(regular_bimodule(alg), alg->radical());
    if (ref == "bar") return make_bar_instance(alg);
    if (auto r = parse_call(ref, "free")) return make_free_instance(alg, *r);
    if (auto n = parse_call(ref, "theta")) return build_theta(alg, *n, gldim_bound).theta;
  }
  return load_bimodule(ref, alg);
}

GradedMapFile load_graded_map(const std::string& path, const Field& builtin_field, TowerOptions opts) {
  Json j = read_json_file(path);
  fs::path base = fs::path(path).parent_path();
  const Json& t = member(j, "tower", path);
  std::string tw = path + ": tower";
  const Json& aref = member(t, "algebra", tw);
  const Json& sref = member(t, "sigma", tw);
  if (!aref.is_string() || !sref.is_string()) bad(tw, "algebra and sigma must be strings");
  Field F = t.contains("field") ? field_from_json(t["field"], tw + ".field") : builtin_field;
  AlgebraPtr alg = load_algebra(resolve(base, aref.get<std::string>()), F);
  Bimodule sigma = load_sigma(resolve(base, sref.get<std::string>()), alg, opts.gldim_bound);
  GradedMapFile out;
  out.cap = as_index(member(t, "cap", tw), tw + ".cap");
  out.tower = std::make_shared<const TensorTower>(sigma, out.cap, opts);

  auto degrees = [&](const char* key) {
    const Json& d = member(j, key, path);
    if (!d.is_array() || d.empty()) bad(path + ": " + key, "expected a non-empty array of degrees");
    std::vector<size_t> r;
    for (size_t k = 0; k < d.size(); ++k) r.push_back(as_index(d[k], path + ": " + key + "[" + std::to_string(k) + "]"));
    return r;
  };
  std::vector<size_t> sdeg = degrees("source_degrees"), tdeg = degrees("target_degrees");
  GradedMap f{GradedProjective::free(out.tower, sdeg), GradedProjective::free(out.tower, tdeg), {}};
  const Json& es = member(j, "entries", path);
  if (!es.is_array()) bad(path + ": entries", "expected an array");
  for (size_t k = 0; k < es.size(); ++k) {
    std::string ew = path + ": entries[" + std::to_string(k) + "]";
    const Json& e = es[k];
    if (!e.is_array() || e.size() != 4) bad(ew, "expected [j, i, power, coords]");
    size_t tj = as_index(e[0], ew + "[0]"), si = as_index(e[1], ew + "[1]"), pw = as_index(e[2], ew + "[2]");
    if (tj >= tdeg.size() || si >= sdeg.size()) bad(ew, "generator index out of range");
    if (sdeg[si] < tdeg[tj] || sdeg[si] - tdeg[tj] != pw) bad(ew, "power must equal d_i - d_j");
    if (pw > out.cap) bad(ew, "power exceeds the tower cap");
    f.entries.push_back({tj, si, vector_from_json(alg->field(), e[3], out.tower->power(pw).dim(), ew + "[3]")});
  }
  out.map = std::move(f);
  return out;
}

Json graded_map_to_json(const GradedMap& f, const Json& tower_ref) {
  Json j;
  j["tower"] = tower_ref;
  std::vector<size_t> sdeg, tdeg;
  for (const auto& s : f.source.summands()) sdeg.push_back(s.degree);
  for (const auto& s : f.target.summands()) tdeg.push_back(s.degree);
  j["source_degrees"] = sdeg;
  j["target_degrees"] = tdeg;
  j["entries"] = Json::array();
  for (const auto& e : f.entries)
    j["entries"].push_back(Json{e.target, e.source, sdeg[e.source] - tdeg[e.target], vector_to_json(e.value)});
  return j;
}

}  // namespace tcoh
