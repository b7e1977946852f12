#include "tcoh/purity.hpp"

#include "tcoh/errors.hpp"
#include "tcoh/homology.hpp"
#include "tcoh/tensor.hpp"

namespace tcoh {

std::vector<size_t> higher_tor_dims(const RightModule& x, const Bimodule& s, size_t bound) {
  Resolution r = minimal_resolution(x, bound + 1);
  std::vector<size_t> dims;
  for (size_t i = 1; i <= bound; ++i) dims.push_back(tor_dim_from_resolution(r, s.left_actions(), i));
  return dims;
}

namespace {

std::optional<size_t> first_nonzero(const std::vector<size_t>& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return std::nullopt;
}

}  // namespace

PurityReport purity_power(const Bimodule& s, size_t n_max, size_t gldim_bound) {
  if (n_max < 1) throw InputError("purity_power needs n_max >= 1");
  PurityReport rep;
  rep.n_max = n_max;
  rep.gldim_bound = gldim_bound;
  Bimodule prev = regular_bimodule(s.algebra());
  for (size_t k = 1; k <= n_max; ++k) {
    PurityStage st;
    st.k = k;
    st.tor_dims = higher_tor_dims(prev, s, gldim_bound);
    Bimodule cur = k == 1 ? s : tensor_over(prev, s);
    st.dim = cur.dim();
    auto bad = first_nonzero(st.tor_dims);
    st.pure = rep.pure && !bad;
    if (rep.pure && bad) {
      rep.pure = false;
      rep.witness = PurityWitness{k, *bad + 1, st.tor_dims[*bad]};
    }
    rep.stages.push_back(std::move(st));
    if (!rep.pure) break;
    prev = std::move(cur);
  }
  return rep;
}

StabilizationReport purity_stabilization(const RightModule& m, const Bimodule& s, size_t m_max, size_t n_max,
                                         size_t gldim_bound) {
  StabilizationReport rep;
  rep.m_max = m_max;
  rep.n_max = n_max;
  rep.gldim_bound = gldim_bound;
  PurityReport pre = purity_power(s, std::max<size_t>(1, m_max + n_max), gldim_bound);
  rep.precondition_pure = pre.pure;
  rep.precondition_witness = pre.witness;

  RightModule y = m;
  for (size_t j = 0; j <= m_max + n_max; ++j) {
    if (j > 0) y = tensor_over(y, s);
    rep.dims.push_back(y.dim());
    rep.tor_dims.push_back(higher_tor_dims(y, s, gldim_bound));
    rep.tor_vanishes.push_back(!first_nonzero(rep.tor_dims.back()));
  }
  for (size_t m0 = 0; m0 <= m_max && !rep.m0; ++m0) {
    bool ok = true;
    for (size_t j = m0; j <= m0 + n_max && ok; ++j) ok = rep.tor_vanishes[j];
    if (ok) rep.m0 = m0;
  }
  return rep;
}

RHomPurityReport rhom_purity_2dim(const Bimodule& s, const RightModule& m, size_t gldim_bound) {
  RHomPurityReport rep;
  GlobalDimension g = global_dimension(s.algebra(), gldim_bound);
  if (!g.finite || g.value > 2) {
    throw HypothesisError("hypothesis not satisfied: global dimension " +
                          (g.finite ? std::to_string(g.value) : "at least " + std::to_string(g.value)) +
                          " exceeds 2");
  }
  rep.gldim = g.value;
  Resolution rs = minimal_resolution(s, 3);
  for (size_t i = 1; i <= 2; ++i) {
    size_t d = ext_dim_from_resolution(rs, s, i);
    rep.ext_sigma_sigma.push_back(d);
    if (d != 0) {
      throw HypothesisError("hypothesis not satisfied: Ext^" + std::to_string(i) + "(sigma, sigma) has dimension " +
                            std::to_string(d));
    }
  }
  RightModule ms = tensor_over(m, s);
  for (size_t i = 1; i <= 2; ++i) rep.ext_sigma_m.push_back(ext_dim_from_resolution(rs, ms, i));
  rep.pure = rep.ext_sigma_m[0] == 0 && rep.ext_sigma_m[1] == 0;
  return rep;
}

}  // namespace tcoh
