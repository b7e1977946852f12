#include "tcoh/ar.hpp"

#include "tcoh/errors.hpp"
#include "tcoh/homology.hpp"

namespace tcoh {

ThetaData build_theta(AlgebraPtr alg, size_t n, size_t gldim_bound) {
  GlobalDimension g = global_dimension(alg, gldim_bound);
  if (!g.finite) {
    throw HypothesisError("global dimension is at least " + std::to_string(g.value) + ", not finite within bound");
  }
  ThetaData t;
  t.algebra = alg;
  t.n = n;
  t.gldim = g.value;
  Bimodule d = dual_bimodule(alg);
  Bimodule reg = regular_bimodule(alg);
  Resolution r = minimal_resolution(d, g.value + 1);
  for (size_t i = 0; i <= g.value; ++i) {
    if (i == n) continue;
    size_t dim = ext_dim_from_resolution(r, reg, i);
    t.validation.emplace_back(i, dim);
    if (dim != 0) {
      throw HypothesisError("theta not concentrated: Ext^" + std::to_string(i) + "(D A, A) has dimension " +
                            std::to_string(dim));
    }
  }
  t.theta = ext_bimodule(d, reg, n);
  t.theta.validate();
  return t;
}

Truncation preprojective_truncation(const ThetaData& t, size_t D, size_t gldim_bound) {
  TowerOptions opts;
  opts.gldim_bound = gldim_bound;
  Truncation tr;
  tr.tower = std::make_shared<const TensorTower>(t.theta, D, opts);
  tr.dims = tr.tower->dims();
  return tr;
}

TauPair tau_pair(const ThetaData& t, const RightModule& m) {
  TensorProduct mt(m, t.theta);
  HomSpace h(t.theta, m);
  HomSpace back(t.theta, mt.module());
  return {mt.module(), h.module(), adjunction_unit(mt, back)};
}

EtaReport eta_stabilization(const TensorTower& tower, const RightModule& m, size_t s_max) {
  if (s_max > tower.cap()) throw InputError("eta_stabilization: tower cap is below s_max");
  const Field& F = tower.field();
  const Bimodule& theta = tower.sigma();
  EtaReport rep;
  rep.s_max = s_max;
  // N_s = M (x) theta^s, built one factor at a time
  std::vector<std::shared_ptr<TensorProduct>> tps(s_max + 1);
  std::vector<RightModule> ns{m};
  for (size_t s = 1; s <= s_max; ++s) {
    tps[s] = std::make_shared<TensorProduct>(ns.back(), theta);
    ns.push_back(tps[s]->module());
  }
  std::vector<HomSpace> hs;
  for (size_t s = 0; s <= s_max; ++s) {
    hs.emplace_back(static_cast<const RightModule&>(tower.power(s)), ns[s]);
    rep.ladder.push_back(hs.back().dim());
    rep.module_dims.push_back(ns[s].dim());
  }
  for (size_t s = 0; s < s_max; ++s) {
    const HomSpace& h = hs[s];
    const HomSpace& h1 = hs[s + 1];
    const TensorProduct& next = *tps[s + 1];
    size_t d1 = tower.power(s + 1).dim();
    Matrix g(h.dim(), h1.dim());
    for (size_t i = 0; i < h.dim(); ++i) {
      Matrix f = h.to_matrix(unit_vector(h.dim(), i));
      Matrix img(d1, ns[s + 1].dim());
      for (size_t b = 0; b < d1; ++b) {
        auto [u, t] = tower.representative(s + 1, b);
        img.set_row(b, next.class_of(vec_mat(F, u, f), t));
      }
      g.set_row(i, h1.from_matrix(img));
    }
    EtaStep st;
    st.s = s;
    st.dim_hom = h.dim();
    st.dim_next = h1.dim();
    st.rank = rank(F, g);
    st.iso = st.dim_hom == st.dim_next && st.rank == st.dim_hom;
    st.map = std::move(g);
    rep.steps.push_back(std::move(st));
  }
  if (s_max > 0 && rep.steps.back().iso) {
    size_t s = s_max - 1;
    while (s > 0 && rep.steps[s - 1].iso) --s;
    rep.s0 = s;
  } else if (s_max == 0) {
    rep.s0 = 0;
  }
  return rep;
}

}  // namespace tcoh
