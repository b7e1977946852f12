#include "tcoh/graded.hpp"

#include <algorithm>
#include <functional>

#include "tcoh/errors.hpp"
#include "tcoh/homology.hpp"

namespace tcoh {

namespace {

// Tables of w -> mu(x (x) w) on sigma^l for l = 0..n, where act(z) gives
// x * b_z in degree m and step(s, delta) the single steps of the module.
std::vector<Matrix> recursive_tables(const TensorTower& t, size_t m, size_t n, const std::function<Vector(size_t)>& act,
                                     const std::function<const Matrix&(size_t, size_t)>& step,
                                     const std::function<size_t(size_t)>& dim_at) {
  const Field& F = t.field();
  std::vector<Matrix> tables;
  Matrix t0(t.algebra()->dim(), dim_at(m));
  for (size_t z = 0; z < t.algebra()->dim(); ++z) t0.set_row(z, act(z));
  tables.push_back(std::move(t0));
  size_t sd = t.sigma().dim();
  for (size_t l = 1; l <= n; ++l) {
    size_t rows = t.power(l).dim();
    size_t cols = dim_at(m + l);
    Matrix tl(rows, cols);
    for (size_t z = 0; z < rows; ++z) {
      auto [u, w] = t.representative(l, z);
      Vector v = vec_mat(F, u, tables.back());
      Vector row(cols);
      for (size_t d = 0; d < sd; ++d) {
        if (w[d].is_zero()) continue;
        axpy(F, row, w[d], vec_mat(F, v, step(m + l - 1, d)));
      }
      tl.set_row(z, row);
    }
    tables.push_back(std::move(tl));
  }
  return tables;
}

Matrix kron(const Field& F, const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      const Rational& x = a.at(i, j);
      if (x.is_zero()) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l) r.at(i * b.rows() + k, j * b.cols() + l) = F.mul(x, b.at(k, l));
    }
  return r;
}

// Coordinates of the images of the basis of `from` under m, inside `to`.
Matrix induced_step(const Field& F, const Subspace& from, const Matrix& m, const Subspace& to) {
  Matrix r(from.dim(), to.dim());
  for (size_t c = 0; c < from.dim(); ++c) r.set_row(c, to.coordinates(vec_mat(F, from.basis_vector(c), m)));
  return r;
}

Matrix induced_quotient_step(const Subspace& from, const Matrix& m, const Subspace& to) {
  auto free = from.free_columns();
  Matrix r(free.size(), to.ambient_dim() - to.dim());
  for (size_t i = 0; i < free.size(); ++i) r.set_row(i, to.quotient_coords(m.row(free[i])));
  return r;
}

bool all_zero(const std::vector<size_t>& v) {
  return std::all_of(v.begin(), v.end(), [](size_t x) { return x == 0; });
}

}  // namespace

// ---------------------------------------------------------------------------

TensorTower::TensorTower(const Bimodule& sigma, size_t cap, TowerOptions opts) : sigma_(sigma) {
  powers_.push_back(regular_bimodule(sigma.algebra()));
  products_.push_back(nullptr);
  extend_to(cap, opts);
}

void TensorTower::extend_to(size_t new_cap, TowerOptions opts) {
  const Field& F = field();
  if (opts.waive_purity && new_cap > cap()) waived_ = true;
  while (cap() < new_cap) {
    size_t k = cap() + 1;
    if (!opts.waive_purity) {
      PurityStage st;
      st.k = k;
      st.tor_dims = higher_tor_dims(powers_[k - 1], sigma_, opts.gldim_bound);
      for (size_t i = 0; i < st.tor_dims.size(); ++i) {
        if (st.tor_dims[i] != 0) {
          throw PurityError("purity failure at stage " + std::to_string(k) + ": Tor_" + std::to_string(i + 1) +
                                " has dimension " + std::to_string(st.tor_dims[i]),
                            PurityWitness{k, i + 1, st.tor_dims[i]});
        }
      }
      st.pure = true;
      ledger_.push_back(std::move(st));
    }
    std::vector<Matrix> step(sigma_.dim());
    if (k == 1) {
      powers_.push_back(sigma_);
      products_.push_back(nullptr);
      for (size_t d = 0; d < sigma_.dim(); ++d) {
        Matrix s(algebra()->dim(), sigma_.dim());
        for (size_t z = 0; z < algebra()->dim(); ++z) s.set_row(z, sigma_.left_action(z).row(d));
        step[d] = std::move(s);
      }
    } else {
      auto tp = std::make_shared<const TensorProduct>(powers_[k - 1], sigma_);
      powers_.push_back(tp->bimodule());
      products_.push_back(tp);
      for (size_t d = 0; d < sigma_.dim(); ++d) {
        Matrix s(powers_[k - 1].dim(), tp->dim());
        for (size_t z = 0; z < powers_[k - 1].dim(); ++z) s.set_row(z, tp->xi(z).row(d));
        step[d] = std::move(s);
      }
    }
    if (!ledger_.empty() && ledger_.back().k == k) ledger_.back().dim = powers_[k].dim();
    steps_.push_back(std::move(step));
    (void)F;
  }
}

std::vector<size_t> TensorTower::dims() const {
  std::vector<size_t> d;
  for (const auto& p : powers_) d.push_back(p.dim());
  return d;
}

std::pair<Vector, Vector> TensorTower::representative(size_t k, size_t z) const {
  if (k == 0) throw InternalError("degree-zero elements have no tensor representative");
  if (k == 1) return {algebra()->unit(), unit_vector(sigma_.dim(), z)};
  return products_.at(k)->representative(z);
}

Matrix TensorTower::left_mult_matrix(size_t c, const Vector& f, size_t b) const {
  if (b + c > cap()) throw InputError("product degree exceeds the tower cap");
  const Bimodule& pc = powers_.at(c);
  auto tables = recursive_tables(
      *this, c, b, [&](size_t z) { return vec_mat(field(), f, pc.action(z)); },
      [&](size_t s, size_t d) -> const Matrix& { return step(s, d); }, [&](size_t s) { return power(s).dim(); });
  return tables.back();
}

Vector TensorTower::mult(size_t i, const Vector& x, size_t j, const Vector& y) const {
  return vec_mat(field(), y, left_mult_matrix(i, x, j));
}

TensorTower tower_extend(const TensorTower& t, size_t new_cap, TowerOptions opts) {
  if (new_cap < t.cap()) throw InputError("tower_extend cannot shrink a tower");
  TensorTower r = t;
  r.extend_to(new_cap, opts);
  return r;
}

// ---------------------------------------------------------------------------

std::vector<size_t> GradedModule::dims() const {
  std::vector<size_t> d;
  for (const auto& p : parts) d.push_back(p.dim());
  return d;
}

std::vector<Matrix> mu_tables(const GradedModule& g, size_t m, const Vector& x, size_t n) {
  if (m + n > g.top()) throw InputError("mu: degree " + std::to_string(m + n) + " exceeds the cap");
  const RightModule& xm = g.parts.at(m);
  return recursive_tables(
      *g.tower, m, n, [&](size_t z) { return vec_mat(xm.field(), x, xm.action(z)); },
      [&](size_t s, size_t d) -> const Matrix& { return g.steps.at(s).at(d); },
      [&](size_t s) { return g.parts.at(s).dim(); });
}

Matrix mu_table(const GradedModule& g, size_t m, const Vector& x, size_t n) {
  return mu_tables(g, m, x, n).back();
}

Matrix mu_map(const GradedModule& g, size_t m, size_t n, const TensorProduct& tp) {
  const Field& F = g.tower->field();
  Matrix r(tp.dim(), g.parts.at(m + n).dim());
  for (size_t i = 0; i < tp.dim(); ++i) {
    auto [x, w] = tp.representative(i);
    r.set_row(i, vec_mat(F, w, mu_table(g, m, x, n)));
  }
  return r;
}

Matrix mu_map(const GradedModule& g, size_t m, size_t n) {
  if (m + n > g.top()) throw InputError("mu: degree " + std::to_string(m + n) + " exceeds the cap");
  TensorProduct tp(g.parts.at(m), g.tower->power(n));
  return mu_map(g, m, n, tp);
}

bool mu_is_iso(const GradedModule& g, size_t s) {
  const Field& F = g.tower->field();
  size_t target = g.parts.at(s + 1).dim();
  // surjectivity from the single steps
  std::vector<Vector> rows;
  const RightModule& xs = g.parts[s];
  for (size_t d = 0; d < g.tower->sigma().dim(); ++d) {
    const Matrix& st = g.steps[s][d];
    for (size_t c = 0; c < xs.dim(); ++c) rows.push_back(st.row(c));
  }
  if (Subspace::span(F, target, rows).dim() != target) return false;
  return TensorProduct(xs, g.tower->sigma()).dim() == target;
}

// ---------------------------------------------------------------------------

GradedProjective::GradedProjective(std::shared_ptr<const TensorTower> tower, std::vector<GradedSummand> summands)
    : tower_(std::move(tower)), summands_(std::move(summands)) {
  const TensorTower& t = *tower_;
  const Field& F = t.field();
  const AlgebraPtr& alg = t.algebra();
  size_t cap = t.cap();
  for (const auto& sm : summands_) {
    if (sm.vertex >= static_cast<long>(alg->num_vertices())) throw InputError("summand vertex out of range");
  }
  blocks_.resize(cap + 1);
  offsets_.resize(cap + 1);
  module_.tower = tower_;
  for (size_t s = 0; s <= cap; ++s) {
    size_t off = 0;
    std::vector<RightModule> parts;
    for (const auto& sm : summands_) {
      offsets_[s].push_back(off);
      if (s < sm.degree) {
        blocks_[s].emplace_back(F, 0);
        continue;
      }
      const Bimodule& pw = t.power(s - sm.degree);
      Subspace b = sm.vertex < 0 ? Subspace::full(F, pw.dim()) : pw.left_vertex_space(static_cast<size_t>(sm.vertex));
      off += b.dim();
      parts.push_back(submodule(pw, b));
      blocks_[s].push_back(std::move(b));
    }
    offsets_[s].push_back(off);
    module_.parts.push_back(parts.empty() ? RightModule::zero(alg) : direct_sum(parts));
  }
  for (size_t s = 0; s < cap; ++s) {
    std::vector<Matrix> steps;
    for (size_t d = 0; d < t.sigma().dim(); ++d) {
      Matrix m(dim(s), dim(s + 1));
      for (size_t i = 0; i < summands_.size(); ++i) {
        if (s < summands_[i].degree) continue;
        Matrix blk = induced_step(F, blocks_[s][i], t.step(s - summands_[i].degree, d), blocks_[s + 1][i]);
        for (size_t r = 0; r < blk.rows(); ++r)
          for (size_t c = 0; c < blk.cols(); ++c) m.at(offsets_[s][i] + r, offsets_[s + 1][i] + c) = blk.at(r, c);
      }
      steps.push_back(std::move(m));
    }
    module_.steps.push_back(std::move(steps));
  }
}

GradedProjective GradedProjective::free(std::shared_ptr<const TensorTower> tower, const std::vector<size_t>& degrees) {
  std::vector<GradedSummand> s;
  for (size_t d : degrees) s.push_back({-1, d});
  return GradedProjective(std::move(tower), std::move(s));
}

size_t GradedProjective::min_degree() const {
  size_t m = 0;
  for (size_t i = 0; i < summands_.size(); ++i) m = i == 0 ? summands_[i].degree : std::min(m, summands_[i].degree);
  return m;
}

size_t GradedProjective::max_degree() const {
  size_t m = 0;
  for (const auto& s : summands_) m = std::max(m, s.degree);
  return m;
}

const Subspace* GradedProjective::block(size_t i, size_t s) const {
  if (s < summands_.at(i).degree) return nullptr;
  return &blocks_.at(s).at(i);
}

Vector GradedProjective::embed(size_t i, size_t s, const Vector& y) const {
  Vector x(dim(s));
  const Subspace* b = block(i, s);
  if (!b) throw InputError("summand is zero in this degree");
  Vector c = b->coordinates(y);
  for (size_t q = 0; q < c.size(); ++q) x[offsets_[s][i] + q] = c[q];
  return x;
}

Vector GradedProjective::component(const Vector& x, size_t i, size_t s) const {
  const Subspace* b = block(i, s);
  if (!b) return {};
  const Field& F = tower_->field();
  Vector y(b->ambient_dim());
  for (size_t q = 0; q < b->dim(); ++q) {
    const Rational& c = x[offsets_[s][i] + q];
    if (!c.is_zero()) axpy(F, y, c, b->basis_vector(q));
  }
  return y;
}

Matrix GradedMap::slice(size_t s) const {
  const TensorTower& t = *source.tower();
  const Field& F = t.field();
  Matrix r(source.dim(s), target.dim(s));
  for (const auto& e : entries) {
    size_t di = source.summands().at(e.source).degree;
    size_t dj = target.summands().at(e.target).degree;
    if (di < dj) {
      if (!is_zero(e.value)) throw InputError("graded map entry has negative degree");
      continue;
    }
    if (s < di || is_zero(e.value)) continue;
    Matrix l = t.left_mult_matrix(di - dj, e.value, s - di);
    const Subspace* from = source.block(e.source, s);
    const Subspace* to = target.block(e.target, s);
    for (size_t c = 0; c < from->dim(); ++c) {
      Vector img = to->coordinates(vec_mat(F, from->basis_vector(c), l));
      size_t row = source.offset(e.source, s) + c;
      size_t col = target.offset(e.target, s);
      for (size_t q = 0; q < img.size(); ++q) r.at(row, col + q) = F.add(r.at(row, col + q), img[q]);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

GradedKernel graded_kernel(const GradedMap& f, size_t D) {
  const auto& tower = f.source.tower();
  const TensorTower& t = *tower;
  if (D > t.cap()) throw InputError("graded_kernel: cap " + std::to_string(D) + " exceeds the tower cap");
  const Field& F = t.field();
  const AlgebraPtr& alg = t.algebra();
  const GradedModule& P = f.source.module();
  const GradedModule& Q = f.target.module();
  size_t sd = t.sigma().dim();

  GradedKernel g;
  g.cap = D;
  g.kernel.tower = g.image.tower = g.cokernel.tower = tower;
  for (size_t s = 0; s <= D; ++s) {
    Matrix fs = f.slice(s);
    Subspace k = left_kernel(F, fs);
    Subspace im = Subspace::row_space(F, fs);
    g.kernel.parts.push_back(submodule(P.parts[s], k));
    g.image.parts.push_back(submodule(Q.parts[s], im));
    g.cokernel.parts.push_back(quotient_module(Q.parts[s], im));
    g.kernel_spaces.push_back(std::move(k));
    g.image_spaces.push_back(std::move(im));
  }
  for (size_t s = 0; s < D; ++s) {
    std::vector<Matrix> ks, is, cs;
    for (size_t d = 0; d < sd; ++d) {
      ks.push_back(induced_step(F, g.kernel_spaces[s], P.steps[s][d], g.kernel_spaces[s + 1]));
      is.push_back(induced_step(F, g.image_spaces[s], Q.steps[s][d], g.image_spaces[s + 1]));
      cs.push_back(induced_quotient_step(g.image_spaces[s], Q.steps[s][d], g.image_spaces[s + 1]));
    }
    g.kernel.steps.push_back(std::move(ks));
    g.image.steps.push_back(std::move(is));
    g.cokernel.steps.push_back(std::move(cs));
  }

  std::vector<bool> iso;
  for (size_t s = 0; s <= D; ++s) {
    KernelDegree kd;
    kd.degree = s;
    kd.dim_p = P.parts[s].dim();
    kd.dim_q = Q.parts[s].dim();
    kd.dim_k = g.kernel.parts[s].dim();
    kd.dim_i = g.image.parts[s].dim();
    kd.dim_c = g.cokernel.parts[s].dim();
    // K_s modulo the image of mu_{K,s-1,1}
    std::vector<Vector> reached;
    if (s > 0) {
      for (size_t d = 0; d < sd; ++d) {
        const Matrix& st = g.kernel.steps[s - 1][d];
        for (size_t r = 0; r < st.rows(); ++r) reached.push_back(st.row(r));
      }
    }
    Subspace acc = Subspace::span(F, kd.dim_k, reached);
    for (size_t c = 0; c < kd.dim_k; ++c) {
      Vector e = unit_vector(kd.dim_k, c);
      if (acc.contains(e)) continue;
      acc = acc.sum(Subspace::span(F, kd.dim_k, {e}));
      kd.new_generators.push_back(g.kernel_spaces[s].basis_vector(c));
      g.generator_degrees.push_back(s);
    }
    if (s < D) {
      kd.mu_k_iso = mu_is_iso(g.kernel, s);
      kd.mu_c_iso = mu_is_iso(g.cokernel, s);
      iso.push_back(*kd.mu_k_iso);
    }
    g.degrees.push_back(std::move(kd));
  }
  if (D > 0 && iso[D - 1]) {
    size_t d = D - 1;
    while (d > 0 && iso[d - 1]) --d;
    g.stabilization = d;
  }
  (void)alg;
  return g;
}

GradedMap random_graded_map(std::shared_ptr<const TensorTower> tower, std::mt19937_64& rng, size_t max_degree,
                            size_t max_generators) {
  const Field& F = tower->field();
  auto degrees = [&] {
    std::vector<size_t> d(1 + rand_below(rng, max_generators));
    for (auto& x : d) x = rand_below(rng, max_degree + 1);
    return d;
  };
  std::vector<size_t> sdeg = degrees(), tdeg = degrees();
  GradedMap f{GradedProjective::free(tower, sdeg), GradedProjective::free(tower, tdeg), {}};
  for (size_t j = 0; j < tdeg.size(); ++j)
    for (size_t i = 0; i < sdeg.size(); ++i) {
      if (sdeg[i] < tdeg[j]) continue;
      size_t c = sdeg[i] - tdeg[j];
      if (c > tower->cap()) continue;
      Vector v(tower->power(c).dim());
      for (auto& x : v) x = rand_below(rng, 3) == 0 ? random_scalar(F, rng, 2) : Rational();
      if (!is_zero(v)) f.entries.push_back({j, i, std::move(v)});
    }
  return f;
}

// ---------------------------------------------------------------------------

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::CertifiedFlatPath:
      return "certified-flat-path";
    case Verdict::BoundedEvidence:
      return "bounded-evidence";
    case Verdict::HypothesisFailure:
      return "hypothesis-failure";
  }
  return "unknown";
}

bool flat_test(const Bimodule& sigma, size_t gldim_bound, std::vector<std::vector<size_t>>* dims) {
  const AlgebraPtr& alg = sigma.algebra();
  bool flat = true;
  for (size_t v = 0; v < alg->num_vertices(); ++v) {
    auto d = higher_tor_dims(simple_module(alg, v), sigma, std::max<size_t>(1, gldim_bound));
    if (d[0] != 0) flat = false;
    if (dims) dims->push_back(std::move(d));
  }
  return flat;
}

CoherenceCertificate coherence_check(std::shared_ptr<const TensorTower> tower, const std::vector<GradedMap>& maps,
                                     size_t D, size_t gldim_bound) {
  const TensorTower& t = *tower;
  if (D > t.cap()) throw InputError("coherence_check: cap exceeds the tower cap");
  CoherenceCertificate cert;
  cert.cap = D;
  cert.gldim_bound = gldim_bound;
  cert.flat = flat_test(t.sigma(), gldim_bound, &cert.flat_tor_dims);
  if (cert.flat) {
    cert.verdict = Verdict::CertifiedFlatPath;
  } else {
    cert.purity = D == 0 ? PurityReport{} : purity_power(t.sigma(), D, gldim_bound);
    if (!cert.purity->pure) {
      cert.verdict = Verdict::HypothesisFailure;
      cert.witness = cert.purity->witness;
      cert.all_stabilized = false;
      return cert;
    }
    cert.verdict = Verdict::BoundedEvidence;
  }
  for (const auto& f : maps) {
    MapCertificate mc;
    for (const auto& s : f.source.summands()) mc.source_degrees.push_back(s.degree);
    for (const auto& s : f.target.summands()) mc.target_degrees.push_back(s.degree);
    mc.p = std::min(f.source.min_degree(), f.target.min_degree());
    mc.q = std::max(f.source.max_degree(), f.target.max_degree());
    if (mc.q > D) throw InputError("generator degree exceeds the cap");
    mc.kernel = graded_kernel(f, D);
    for (size_t d : mc.kernel.generator_degrees) mc.max_generator_degree = std::max(mc.max_generator_degree, d);
    mc.generators_within_q = mc.max_generator_degree <= mc.q;
    mc.evidence.q = mc.q;
    if (!cert.flat) {
      for (size_t n = 0; mc.q + n <= D; ++n) {
        const RightModule& c = mc.kernel.cokernel.parts[mc.q + n];
        Resolution r = minimal_resolution(c, gldim_bound + 1);
        std::vector<std::vector<size_t>> per_m;
        bool ok = true;
        for (size_t m = 1; mc.q + n + m <= D; ++m) {
          std::vector<size_t> dims;
          for (size_t i = 1; i <= gldim_bound; ++i)
            dims.push_back(tor_dim_from_resolution(r, t.power(m).left_actions(), i));
          ok = ok && all_zero(dims);
          per_m.push_back(std::move(dims));
        }
        mc.evidence.tor_dims.push_back(std::move(per_m));
        if (ok) {
          mc.evidence.n = n;
          break;
        }
      }
    }
    if (!mc.kernel.stabilization) cert.all_stabilized = false;
    cert.maps.push_back(std::move(mc));
  }
  return cert;
}

// ---------------------------------------------------------------------------

GradedModule tensor_with_tower(const RightModule& m, std::shared_ptr<const TensorTower> tower) {
  const TensorTower& t = *tower;
  GradedModule g;
  g.tower = tower;
  std::vector<std::shared_ptr<TensorProduct>> tps;
  g.parts.push_back(m);
  tps.push_back(nullptr);
  for (size_t s = 1; s <= t.cap(); ++s) {
    tps.push_back(std::make_shared<TensorProduct>(m, t.power(s)));
    g.parts.push_back(tps.back()->module());
  }
  for (size_t s = 0; s < t.cap(); ++s) {
    std::vector<Matrix> steps;
    for (size_t d = 0; d < t.sigma().dim(); ++d) {
      if (s == 0) {
        Matrix st(m.dim(), tps[1]->dim());
        for (size_t k = 0; k < m.dim(); ++k) st.set_row(k, tps[1]->xi(k).row(d));
        steps.push_back(std::move(st));
      } else {
        steps.push_back(tps[s]->map_right(t.step(s, d), *tps[s + 1]));
      }
    }
    g.steps.push_back(std::move(steps));
  }
  return g;
}

GradedModule graded_simple(std::shared_ptr<const TensorTower> tower, size_t v) {
  const TensorTower& t = *tower;
  GradedModule g;
  g.tower = tower;
  g.parts.push_back(simple_module(t.algebra(), v));
  for (size_t s = 1; s <= t.cap(); ++s) g.parts.push_back(RightModule::zero(t.algebra()));
  for (size_t s = 0; s < t.cap(); ++s)
    g.steps.emplace_back(t.sigma().dim(), Matrix(g.parts[s].dim(), 0));
  return g;
}

GradedResolution graded_resolution(const GradedModule& x, size_t length_bound) {
  const TensorTower& t = *x.tower;
  const Field& F = t.field();
  const AlgebraPtr& alg = t.algebra();
  size_t D = x.top();
  size_t sd = t.sigma().dim();
  GradedResolution res;
  res.cap = D;
  res.length_bound = length_bound;
  GradedModule cur = x;
  for (size_t i = 0;; ++i) {
    bool zero = std::all_of(cur.parts.begin(), cur.parts.end(), [](const RightModule& p) { return p.dim() == 0; });
    if (zero) {
      res.terminated = true;
      break;
    }
    if (i > length_bound) break;
    // minimal generators degree by degree: X_s modulo X_{s-1} sigma + X_s rad
    std::vector<GradedSummand> summands;
    std::vector<Vector> gens;
    for (size_t s = 0; s <= D; ++s) {
      const RightModule& xs = cur.parts[s];
      std::vector<Vector> reached;
      if (s > 0) {
        for (size_t d = 0; d < sd; ++d) {
          const Matrix& st = cur.steps[s - 1][d];
          for (size_t r = 0; r < st.rows(); ++r) reached.push_back(st.row(r));
        }
      }
      Subspace acc = Subspace::span(F, xs.dim(), reached).sum(radical_submodule(xs));
      for (size_t v = 0; v < alg->num_vertices(); ++v) {
        const Subspace& xv = xs.vertex_space(v);
        for (size_t c = 0; c < xv.dim(); ++c) {
          Vector g = xv.basis_vector(c);
          if (acc.contains(g)) continue;
          acc = acc.sum(Subspace::span(F, xs.dim(), {g}));
          summands.push_back({static_cast<long>(v), s});
          gens.push_back(std::move(g));
        }
      }
    }
    GradedProjective p(x.tower, summands);
    std::vector<std::vector<Matrix>> tables;
    for (size_t j = 0; j < summands.size(); ++j) tables.push_back(mu_tables(cur, summands[j].degree, gens[j], D - summands[j].degree));
    GradedModule ker;
    ker.tower = x.tower;
    std::vector<Subspace> kspaces;
    GradedResolutionTerm term;
    term.summands = summands;
    std::vector<size_t> sdims;
    for (size_t s = 0; s <= D; ++s) {
      Matrix cover(p.dim(s), cur.parts[s].dim());
      for (size_t j = 0; j < summands.size(); ++j) {
        const Subspace* b = p.block(j, s);
        if (!b) continue;
        const Matrix& tab = tables[j][s - summands[j].degree];
        for (size_t c = 0; c < b->dim(); ++c) cover.set_row(p.offset(j, s) + c, vec_mat(F, b->basis_vector(c), tab));
      }
      if (rank(F, cover) != cur.parts[s].dim()) throw InternalError("graded cover is not surjective");
      Subspace k = left_kernel(F, cover);
      ker.parts.push_back(submodule(p.module().parts[s], k));
      term.kernel_dims.push_back(k.dim());
      sdims.push_back(p.dim(s));
      kspaces.push_back(std::move(k));
    }
    for (size_t s = 0; s < D; ++s) {
      std::vector<Matrix> ks;
      for (size_t d = 0; d < sd; ++d) ks.push_back(induced_step(F, kspaces[s], p.module().steps[s][d], kspaces[s + 1]));
      ker.steps.push_back(std::move(ks));
    }
    res.terms.push_back(std::move(term));
    res.slice_dims.push_back(std::move(sdims));
    cur = std::move(ker);
  }
  return res;
}

// ---------------------------------------------------------------------------

Bimodule make_free_instance(AlgebraPtr alg, size_t r) {
  if (r < 1) throw InputError("free(r) needs r >= 1");
  std::vector<Matrix> right, left;
  for (size_t b = 0; b < alg->dim(); ++b) {
    right.push_back(block_diagonal(std::vector<Matrix>(r, alg->right_mult(b))));
    left.push_back(block_diagonal(std::vector<Matrix>(r, alg->left_mult(b))));
  }
  size_t d = r * alg->dim();
  return Bimodule(std::move(alg), d, std::move(right), std::move(left));
}

Bimodule make_bar_instance(AlgebraPtr alg) {
  const Field& F = alg->field();
  size_t n = alg->dim();
  Matrix id = Matrix::identity(F, n);
  std::vector<Matrix> right, left;
  for (size_t b = 0; b < n; ++b) {
    right.push_back(kron(F, id, alg->right_mult(b)));
    left.push_back(kron(F, alg->left_mult(b), id));
  }
  return Bimodule(alg, n * n, std::move(right), std::move(left));
}

}  // namespace tcoh
