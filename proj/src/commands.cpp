#include "tcoh/commands.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "tcoh/ar.hpp"
#include "tcoh/errors.hpp"
#include "tcoh/homology.hpp"
#include "tcoh/purity.hpp"

namespace tcoh {

const char* const kToolVersion = "0.1.0";

namespace {

const std::set<std::string> kBoundKeys = {"cap",     "max_power",  "s_max", "m_max", "length", "seed", "n",
                                          "i",       "samples",    "max_degree",  "gldim_bound", "vertex"};

struct Context {
  const CommandRequest& req;
  Json report;
  Field field;

  size_t bound(const char* key, size_t fallback) {
    size_t v = fallback;
    if (req.bounds.contains(key)) v = req.bounds[key].get<size_t>();
    report["parameters"][key] = v;
    return v;
  }
  bool has(const char* key) const { return req.bounds.contains(key); }

  const std::string& need(const std::optional<std::string>& v, const char* what) {
    if (!v) throw InputError(req.command + " needs --" + std::string(what));
    report["inputs"][what] = *v;
    return *v;
  }

  AlgebraPtr algebra() {
    AlgebraPtr a = load_algebra(need(req.algebra, "algebra"), field);
    field = a->field();
    return a;
  }

  RightModule module(AlgebraPtr alg) {
    if (!req.module && has("vertex")) {
      size_t v = bound("vertex", 0);
      if (v >= alg->num_vertices()) throw InputError("vertex out of range");
      return simple_module(alg, v);
    }
    const std::string& ref = need(req.module, "module");
    if (ref == "regular") return regular_module(alg);
    if (ref == "zero") return RightModule::zero(alg);
    return load_module(ref, alg);
  }

  Bimodule sigma(AlgebraPtr alg, size_t gldim_bound) { return load_sigma(need(req.sigma, "sigma"), alg, gldim_bound); }
};

Json opt(const std::optional<size_t>& v) { return v ? Json(*v) : Json(nullptr); }
Json opt(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }

Json witness_json(const std::optional<PurityWitness>& w) {
  if (!w) return nullptr;
  return {{"stage", w->stage}, {"tor_index", w->index}, {"dim", w->dim}};
}

Json purity_json(const PurityReport& r) {
  Json j;
  j["n_max"] = r.n_max;
  j["gldim_bound"] = r.gldim_bound;
  j["pure"] = r.pure;
  j["witness"] = witness_json(r.witness);
  j["stages"] = Json::array();
  for (const auto& s : r.stages) j["stages"].push_back({{"k", s.k}, {"dim", s.dim}, {"tor_dims", s.tor_dims}, {"pure", s.pure}});
  return j;
}

Json kernel_json(const GradedKernel& g, bool with_generators) {
  Json j;
  j["cap"] = g.cap;
  j["generator_degrees"] = g.generator_degrees;
  j["stabilization"] = opt(g.stabilization);
  j["degrees"] = Json::array();
  for (const auto& d : g.degrees) {
    Json e{{"degree", d.degree}, {"dim_p", d.dim_p},   {"dim_q", d.dim_q},       {"dim_k", d.dim_k},
           {"dim_i", d.dim_i},   {"dim_c", d.dim_c},   {"mu_k_iso", opt(d.mu_k_iso)}, {"mu_c_iso", opt(d.mu_c_iso)},
           {"new_generators", d.new_generators.size()}};
    if (with_generators) {
      e["generators"] = Json::array();
      for (const auto& v : d.new_generators) e["generators"].push_back(vector_to_json(v));
    }
    j["degrees"].push_back(std::move(e));
  }
  return j;
}

Json certificate_json(const CoherenceCertificate& c) {
  Json j;
  j["cap"] = c.cap;
  j["gldim_bound"] = c.gldim_bound;
  j["flat"] = c.flat;
  j["flat_tor_dims"] = c.flat_tor_dims;
  j["purity"] = c.purity ? purity_json(*c.purity) : Json(nullptr);
  j["verdict"] = verdict_name(c.verdict);
  j["witness"] = witness_json(c.witness);
  j["all_stabilized"] = c.all_stabilized;
  j["seed"] = c.seed ? Json(*c.seed) : Json(nullptr);
  j["maps"] = Json::array();
  for (const auto& m : c.maps) {
    Json e;
    e["source_degrees"] = m.source_degrees;
    e["target_degrees"] = m.target_degrees;
    e["p"] = m.p;
    e["q"] = m.q;
    e["max_generator_degree"] = m.max_generator_degree;
    e["generators_within_q"] = m.generators_within_q;
    e["kernel"] = kernel_json(m.kernel, false);
    e["tor_evidence"] = {{"q", m.evidence.q}, {"n", opt(m.evidence.n)}, {"tor_dims", m.evidence.tor_dims}};
    j["maps"].push_back(std::move(e));
  }
  return j;
}

size_t idempotent_rank(const Bimodule& b, const Vector& e, bool left) {
  return rank(b.field(), left ? b.left_action_of(e) : b.action_of(e));
}

// --- commands ---------------------------------------------------------------

int cmd_validate(Context& c) {
  AlgebraPtr alg = c.algebra();
  Json a;
  a["dim"] = alg->dim();
  a["basis"] = alg->basis_names();
  a["vertices"] = alg->num_vertices();
  a["basic"] = alg->is_basic();
  a["radical_dim"] = alg->radical_available() ? Json(alg->radical().dim()) : Json(nullptr);
  c.report["algebra"] = a;
  if (c.req.module) c.report["module"] = {{"dim", c.module(alg).dim()}};
  if (c.req.sigma) {
    Bimodule s = c.sigma(alg, c.bound("gldim_bound", 4));
    c.report["sigma"] = {{"dim", s.dim()}};
  }
  c.report["verdict"] = "valid";
  return 0;
}

int cmd_resolve(Context& c) {
  AlgebraPtr alg = c.algebra();
  RightModule m = c.module(alg);
  Resolution r = minimal_resolution(m, c.bound("length", 6));
  Json terms = Json::array();
  for (const auto& t : r.terms) terms.push_back({{"vertices", t.vertices()}, {"dim", t.dim()}});
  c.report["module_dim"] = m.dim();
  c.report["terms"] = terms;
  c.report["complete"] = r.complete;
  c.report["length"] = r.complete ? Json(r.length()) : Json(nullptr);
  c.report["verdict"] = r.complete ? "terminated" : "not-terminated-within-bound";
  return r.complete ? 0 : 1;
}

int cmd_tor(Context& c) {
  AlgebraPtr alg = c.algebra();
  RightModule m = c.module(alg);
  Bimodule s = c.sigma(alg, c.bound("gldim_bound", 4));
  size_t len = c.bound("length", 3);
  std::vector<size_t> dims;
  for (size_t i = 0; i <= len; ++i) dims.push_back(tor_dim(m, s, i));
  c.report["tor_dims"] = dims;
  c.report["verdict"] = "computed";
  return 0;
}

int cmd_ext(Context& c) {
  AlgebraPtr alg = c.algebra();
  RightModule x = c.module(alg);
  const std::string& tref = c.need(c.req.target, "target");
  RightModule y = tref == "regular" ? regular_module(alg) : load_module(tref, alg);
  size_t len = c.bound("length", 3);
  std::vector<size_t> dims;
  for (size_t i = 0; i <= len; ++i) dims.push_back(ext_dim(x, y, i));
  c.report["ext_dims"] = dims;
  c.report["verdict"] = "computed";
  return 0;
}

int cmd_purity(Context& c) {
  AlgebraPtr alg = c.algebra();
  size_t g = c.bound("gldim_bound", 2);
  Bimodule s = c.sigma(alg, g);
  PurityReport r = purity_power(s, c.bound("max_power", 3), g);
  c.report["purity"] = purity_json(r);
  c.report["verdict"] = r.pure ? "pure-within-bound" : "not-pure";
  return r.pure ? 0 : 1;
}

int cmd_stabilize(Context& c) {
  AlgebraPtr alg = c.algebra();
  size_t g = c.bound("gldim_bound", 2);
  RightModule m = c.module(alg);
  Bimodule s = c.sigma(alg, g);
  StabilizationReport r = purity_stabilization(m, s, c.bound("m_max", 4), c.bound("max_power", 2), g);
  Json j;
  j["m_max"] = r.m_max;
  j["n_max"] = r.n_max;
  j["gldim_bound"] = r.gldim_bound;
  j["precondition_pure"] = r.precondition_pure;
  j["precondition_witness"] = witness_json(r.precondition_witness);
  j["dims"] = r.dims;
  j["tor_dims"] = r.tor_dims;
  j["tor_vanishes"] = r.tor_vanishes;
  j["m0"] = opt(r.m0);
  c.report["stabilization"] = j;
  c.report["verdict"] = r.m0 ? "stabilized-bounded-evidence" : "not-stabilized-within-bound";
  return r.m0 ? 0 : 1;
}

int cmd_graded_kernel(Context& c) {
  TowerOptions opts;
  opts.waive_purity = true;
  opts.gldim_bound = c.bound("gldim_bound", 2);
  GradedMapFile f = load_graded_map(c.need(c.req.map, "map"), c.field, opts);
  c.field = f.tower->field();
  size_t D = c.bound("cap", f.cap);
  GradedKernel g = graded_kernel(f.map, D);
  c.report["tower_dims"] = f.tower->dims();
  c.report["kernel"] = kernel_json(g, true);
  c.report["verdict"] = g.stabilization ? "stabilized" : "not-stabilized-within-bound";
  return g.stabilization ? 0 : 1;
}

int cmd_coherence(Context& c) {
  TowerOptions opts;
  opts.waive_purity = true;
  opts.gldim_bound = c.bound("gldim_bound", 2);
  std::shared_ptr<const TensorTower> tower;
  std::vector<GradedMap> maps;
  std::optional<uint64_t> seed;
  size_t D = 0;
  if (c.req.map) {
    GradedMapFile f = load_graded_map(c.need(c.req.map, "map"), c.field, opts);
    tower = f.tower;
    D = c.bound("cap", f.cap);
    maps.push_back(std::move(f.map));
  } else {
    AlgebraPtr alg = c.algebra();
    Bimodule s = c.sigma(alg, opts.gldim_bound);
    D = c.bound("cap", 3);
    tower = std::make_shared<const TensorTower>(s, D, opts);
    seed = c.bound("seed", 1);
    std::mt19937_64 rng(*seed);
    size_t samples = c.bound("samples", 10), max_degree = c.bound("max_degree", std::min<size_t>(2, D));
    if (max_degree > D) throw InputError("max_degree exceeds the cap");
    for (size_t k = 0; k < samples; ++k) maps.push_back(random_graded_map(tower, rng, max_degree));
  }
  c.field = tower->field();
  CoherenceCertificate cert = coherence_check(tower, maps, D, opts.gldim_bound);
  cert.seed = seed;
  c.report["tower_dims"] = tower->dims();
  c.report["certificate"] = certificate_json(cert);
  c.report["verdict"] = verdict_name(cert.verdict);
  bool ok = cert.verdict == Verdict::CertifiedFlatPath ||
            (cert.verdict == Verdict::BoundedEvidence && cert.all_stabilized);
  return ok ? 0 : 1;
}

int cmd_graded_resolve(Context& c) {
  AlgebraPtr alg = c.algebra();
  TowerOptions opts;
  opts.waive_purity = true;
  opts.gldim_bound = c.bound("gldim_bound", 2);
  Bimodule s = c.sigma(alg, opts.gldim_bound);
  auto tower = std::make_shared<const TensorTower>(s, c.bound("cap", 4), opts);
  GradedModule x;
  if (c.req.module) {
    x = tensor_with_tower(c.module(alg), tower);
  } else {
    size_t v = c.bound("vertex", 0);
    if (v >= alg->num_vertices()) throw InputError("vertex out of range");
    x = graded_simple(tower, v);
  }
  GradedResolution r = graded_resolution(x, c.bound("length", 4));
  Json terms = Json::array();
  for (size_t i = 0; i < r.terms.size(); ++i) {
    Json sm = Json::array();
    for (const auto& g : r.terms[i].summands) sm.push_back({{"vertex", g.vertex}, {"degree", g.degree}});
    terms.push_back({{"summands", sm}, {"slice_dims", r.slice_dims[i]}, {"kernel_dims", r.terms[i].kernel_dims}});
  }
  c.report["module_dims"] = x.dims();
  c.report["terms"] = terms;
  c.report["terminated"] = r.terminated;
  c.report["length"] = r.terminated ? Json(r.length()) : Json(nullptr);
  c.report["verdict"] = r.terminated ? "terminated" : "not-terminated-within-bound";
  return r.terminated ? 0 : 1;
}

ThetaData theta_of(Context& c, AlgebraPtr alg) {
  return build_theta(alg, c.bound("n", 1), c.bound("gldim_bound", 4));
}

int cmd_theta(Context& c) {
  AlgebraPtr alg = c.algebra();
  ThetaData t = theta_of(c, alg);
  Json splits_left = Json::array(), splits_right = Json::array();
  for (size_t v = 0; v < alg->num_vertices(); ++v) {
    splits_left.push_back(idempotent_rank(t.theta, alg->idempotent(v), true));
    splits_right.push_back(idempotent_rank(t.theta, alg->idempotent(v), false));
  }
  Json val = Json::array();
  for (auto [i, d] : t.validation) val.push_back({{"i", i}, {"dim", d}});
  c.report["dim"] = t.theta.dim();
  c.report["gldim"] = t.gldim;
  c.report["validation"] = val;
  c.report["split_left"] = splits_left;    // e_v theta
  c.report["split_right"] = splits_right;  // theta e_v
  c.report["theta"] = bimodule_to_json(t.theta, *c.req.algebra);
  c.report["verdict"] = "concentrated";
  return 0;
}

int cmd_preprojective(Context& c) {
  AlgebraPtr alg = c.algebra();
  ThetaData t = theta_of(c, alg);
  Truncation tr = preprojective_truncation(t, c.bound("cap", 3), c.bound("gldim_bound", 4));
  Json ledger = Json::array();
  for (const auto& s : tr.tower->ledger())
    ledger.push_back({{"k", s.k}, {"dim", s.dim}, {"tor_dims", s.tor_dims}, {"pure", s.pure}});
  c.report["dims"] = tr.dims;
  c.report["purity_ledger"] = ledger;
  c.report["verdict"] = "pure-within-bound";
  return 0;
}

int cmd_eta(Context& c) {
  AlgebraPtr alg = c.algebra();
  ThetaData t = theta_of(c, alg);
  RightModule m = c.module(alg);
  size_t s_max = c.bound("s_max", 4);
  TowerOptions opts;
  opts.gldim_bound = c.bound("gldim_bound", 4);
  TensorTower tower(t.theta, s_max, opts);
  EtaReport r = eta_stabilization(tower, m, s_max);
  Json steps = Json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"s", s.s}, {"dim_hom", s.dim_hom}, {"dim_next", s.dim_next}, {"rank", s.rank}, {"iso", s.iso}});
  c.report["eta"] = {{"s_max", r.s_max}, {"ladder", r.ladder}, {"module_dims", r.module_dims},
                     {"steps", steps},   {"s0", opt(r.s0)}};
  c.report["verdict"] = r.s0 ? "stabilized" : "not-stabilized-within-bound";
  return r.s0 ? 0 : 1;
}

int cmd_lemma34(Context& c) {
  AlgebraPtr alg = c.algebra();
  size_t g = c.bound("gldim_bound", 3);
  Bimodule s = c.sigma(alg, g);
  RightModule m = c.module(alg);
  RHomPurityReport r = rhom_purity_2dim(s, m, g);
  c.report["gldim"] = r.gldim;
  c.report["ext_sigma_sigma"] = r.ext_sigma_sigma;
  c.report["ext_sigma_m_sigma"] = r.ext_sigma_m;
  c.report["pure"] = r.pure;
  c.report["verdict"] = r.pure ? "pure" : "not-pure";
  return r.pure ? 0 : 1;
}

struct CommandInfo {
  int (*run)(Context&);
  std::vector<std::string> verdicts;
};

const std::map<std::string, CommandInfo>& commands() {
  static const std::map<std::string, CommandInfo> table = {
      {"validate", {cmd_validate, {"valid", "input-error"}}},
      {"resolve", {cmd_resolve, {"terminated", "not-terminated-within-bound"}}},
      {"tor", {cmd_tor, {"computed", "undetermined"}}},
      {"ext", {cmd_ext, {"computed", "undetermined"}}},
      {"purity", {cmd_purity, {"pure-within-bound", "not-pure"}}},
      {"stabilize", {cmd_stabilize, {"stabilized-bounded-evidence", "not-stabilized-within-bound"}}},
      {"graded-kernel", {cmd_graded_kernel, {"stabilized", "not-stabilized-within-bound"}}},
      {"coherence", {cmd_coherence, {"certified-flat-path", "bounded-evidence", "hypothesis-failure"}}},
      {"graded-resolve", {cmd_graded_resolve, {"terminated", "not-terminated-within-bound"}}},
      {"theta", {cmd_theta, {"concentrated", "hypothesis-failure"}}},
      {"preprojective", {cmd_preprojective, {"pure-within-bound", "hypothesis-failure"}}},
      {"eta", {cmd_eta, {"stabilized", "not-stabilized-within-bound", "hypothesis-failure"}}},
      {"lemma34", {cmd_lemma34, {"pure", "not-pure", "hypothesis-failure"}}},
  };
  return table;
}

Json base_report(const CommandRequest& r) {
  Json j;
  j["tool"] = {{"name", "tcoh"}, {"version", kToolVersion}};
  j["command"] = r.command;
  j["bounds"] = r.bounds;
  j["parameters"] = Json::object();
  j["inputs"] = Json::object();
  auto it = commands().find(r.command);
  j["verdict_taxonomy"] = it == commands().end() ? Json::array() : Json(it->second.verdicts);
  return j;
}

void render(const Json& j, const std::string& indent, std::ostringstream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    bool flat_array = v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
    if (v.is_primitive()) {
      out << indent << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else if (flat_array || (v.is_array() && v.empty())) {
      out << indent << it.key() << ": " << v.dump() << "\n";
    } else if (v.is_array()) {
      out << indent << it.key() << ":\n";
      for (size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_object()) {
          out << indent << "  [" << k << "]\n";
          render(v[k], indent + "    ", out);
        } else {
          out << indent << "  [" << k << "] " << v[k].dump() << "\n";
        }
      }
    } else {
      out << indent << it.key() << ":\n";
      render(v, indent + "  ", out);
    }
  }
}

}  // namespace

CommandRequest request_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("request: expected an object");
  CommandRequest r;
  static const std::set<std::string> keys = {"command", "algebra", "module", "target", "sigma",
                                             "map",     "field",   "bounds", "format", "out"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!keys.count(it.key())) throw InputError("request: unknown key \"" + it.key() + "\"");
  if (!j.contains("command") || !j["command"].is_string()) throw InputError("request: missing \"command\"");
  r.command = j["command"].get<std::string>();
  auto str = [&](const char* key, std::optional<std::string>& dst) {
    if (!j.contains(key) || j[key].is_null()) return;
    if (!j[key].is_string()) throw InputError(std::string("request: \"") + key + "\" must be a string");
    dst = j[key].get<std::string>();
  };
  str("algebra", r.algebra);
  str("module", r.module);
  str("target", r.target);
  str("sigma", r.sigma);
  str("map", r.map);
  str("out", r.out);
  if (j.contains("field")) {
    field_from_json(j["field"], "request.field");
    r.field = j["field"];
  }
  if (j.contains("format")) {
    if (!j["format"].is_string()) throw InputError("request: \"format\" must be a string");
    r.format = j["format"].get<std::string>();
    if (r.format != "json" && r.format != "text") throw InputError("request: format must be json or text");
  }
  if (j.contains("bounds")) {
    const Json& b = j["bounds"];
    if (!b.is_object()) throw InputError("request: \"bounds\" must be an object");
    for (auto it = b.begin(); it != b.end(); ++it) {
      if (!kBoundKeys.count(it.key())) throw InputError("request: unknown bound \"" + it.key() + "\"");
      if (!it.value().is_number_integer() || it.value().get<int64_t>() < 0)
        throw InputError("request: bound \"" + it.key() + "\" must be a non-negative integer");
    }
    r.bounds = b;
  }
  return r;
}

CommandResult run_command(const CommandRequest& r) {
  CommandResult res;
  Context c{r, base_report(r), Field::rationals()};
  try {
    c.field = field_from_json(r.field, "request.field");
    auto it = commands().find(r.command);
    if (it == commands().end()) throw InputError("unknown command \"" + r.command + "\"");
    res.exit_code = it->second.run(c);
  } catch (const InputError& e) {
    res.exit_code = 2;
    c.report["verdict"] = "input-error";
    c.report["error"] = e.what();
  } catch (const HypothesisError& e) {
    res.exit_code = 1;
    c.report["verdict"] = "hypothesis-failure";
    c.report["error"] = e.what();
    if (auto* p = dynamic_cast<const PurityError*>(&e)) c.report["witness"] = witness_json(p->witness);
  } catch (const UndeterminedError& e) {
    res.exit_code = 1;
    c.report["verdict"] = "undetermined";
    c.report["error"] = e.what();
  } catch (const std::exception& e) {
    res.exit_code = 3;
    c.report["verdict"] = "internal-error";
    c.report["error"] = e.what();
  }
  c.report["field"] = field_to_json(c.field);
  c.report["exit_code"] = res.exit_code;
  res.report = std::move(c.report);
  res.rendered = r.format == "text" ? render_text(res.report) : res.report.dump(2) + "\n";
  if (r.out) {
    std::ofstream f(*r.out);
    if (!f) {
      res.exit_code = 2;
      res.report["error"] = "cannot write " + *r.out;
    } else {
      f << res.rendered;
    }
  }
  return res;
}

CommandResult run_request(const std::string& request_json) {
  CommandRequest r;
  try {
    Json j;
    try {
      j = Json::parse(request_json);
    } catch (const Json::parse_error& e) {
      throw InputError("request: byte " + std::to_string(e.byte) + ": " + e.what());
    }
    r = request_from_json(j);
  } catch (const InputError& e) {
    CommandResult res;
    res.exit_code = 2;
    res.report = base_report(r);
    res.report["verdict"] = "input-error";
    res.report["error"] = e.what();
    res.report["exit_code"] = 2;
    res.rendered = res.report.dump(2) + "\n";
    return res;
  }
  return run_command(r);
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  render(report, "", out);
  return out.str();
}

}  // namespace tcoh
