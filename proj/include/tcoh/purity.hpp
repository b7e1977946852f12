#pragma once

#include <optional>
#include <vector>

#include "tcoh/errors.hpp"
#include "tcoh/module.hpp"

namespace tcoh {

struct PurityWitness {
  size_t stage = 0;  // k for powers, j for stabilization towers
  size_t index = 0;  // Tor index i
  size_t dim = 0;
};

// Purity failure carrying its witness.
class PurityError : public HypothesisError {
 public:
  PurityError(const std::string& what, PurityWitness w) : HypothesisError(what), witness(w) {}
  PurityWitness witness;
};

// dim Tor_i(x, s) for i = 1..bound.
std::vector<size_t> higher_tor_dims(const RightModule& x, const Bimodule& s, size_t bound);

struct PurityStage {
  size_t k = 0;
  size_t dim = 0;                 // dim of the k-th power
  std::vector<size_t> tor_dims;   // dim Tor_i(sigma^{k-1}, sigma), i = 1..bound
  bool pure = false;
};

struct PurityReport {
  size_t n_max = 0;
  size_t gldim_bound = 0;
  std::vector<PurityStage> stages;
  bool pure = true;
  std::optional<PurityWitness> witness;
};

// sigma^k = sigma^{k-1} (x) sigma is pure when sigma^{k-1} is pure and
// Tor_i(sigma^{k-1}, sigma) = 0 for 1 <= i <= gldim_bound.
PurityReport purity_power(const Bimodule& s, size_t n_max, size_t gldim_bound);

struct StabilizationReport {
  size_t m_max = 0;
  size_t n_max = 0;
  size_t gldim_bound = 0;
  bool precondition_pure = false;            // purity_power(s, m_max + n_max)
  std::optional<PurityWitness> precondition_witness;
  std::vector<size_t> dims;                  // dim M (x) sigma^j
  std::vector<bool> tor_vanishes;            // Tor_i(M (x) sigma^j, sigma) = 0 for all i
  std::vector<std::vector<size_t>> tor_dims;
  std::optional<size_t> m0;
};

// Least m0 <= m_max such that Tor_i(M (x) sigma^j, sigma) = 0 for
// m0 <= j <= m0 + n_max and 1 <= i <= gldim_bound. Bounded evidence only.
StabilizationReport purity_stabilization(const RightModule& m, const Bimodule& s, size_t m_max, size_t n_max,
                                         size_t gldim_bound);

struct RHomPurityReport {
  size_t gldim = 0;
  std::vector<size_t> ext_sigma_sigma;  // dim Ext^i(sigma, sigma), i = 1, 2
  std::vector<size_t> ext_sigma_m;      // dim Ext^i(sigma, M (x) sigma), i = 1, 2
  bool pure = false;
};

// Throws HypothesisError when gldim > 2 or Ext^{1,2}(sigma, sigma) != 0.
RHomPurityReport rhom_purity_2dim(const Bimodule& s, const RightModule& m, size_t gldim_bound);

}  // namespace tcoh
