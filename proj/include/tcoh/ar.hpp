#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "tcoh/graded.hpp"
#include "tcoh/tensor.hpp"

namespace tcoh {

struct ThetaData {
  AlgebraPtr algebra;
  size_t n = 0;
  size_t gldim = 0;
  Bimodule theta;
  std::vector<std::pair<size_t, size_t>> validation;  // (i, dim Ext^i(D A, A)) for i != n
};

// theta = Ext^n(D A, A) with both induced actions. Throws HypothesisError
// ("theta not concentrated") when Ext^i != 0 for some i != n up to gldim.
ThetaData build_theta(AlgebraPtr alg, size_t n, size_t gldim_bound);

struct Truncation {
  std::shared_ptr<const TensorTower> tower;
  std::vector<size_t> dims;  // dim theta^0 .. theta^D
};

// Tower of T_A(theta) up to degree D; purity of every stage is checked.
Truncation preprojective_truncation(const ThetaData& t, size_t D, size_t gldim_bound);

struct TauPair {
  RightModule tau;        // M (x) theta
  RightModule tau_minus;  // Hom(theta, M)
  Matrix unit;            // M -> Hom(theta, M (x) theta)
};

TauPair tau_pair(const ThetaData& t, const RightModule& m);

struct EtaStep {
  size_t s = 0;
  size_t dim_hom = 0;        // dim Hom(theta^s, M (x) theta^s)
  size_t dim_next = 0;
  size_t rank = 0;
  bool iso = false;
  Matrix map;                // H_s -> H_{s+1}
};

struct EtaReport {
  size_t s_max = 0;
  std::vector<size_t> ladder;          // dim H_s for s = 0..s_max
  std::vector<size_t> module_dims;     // dim M (x) theta^s
  std::vector<EtaStep> steps;          // s = 0..s_max-1
  std::optional<size_t> s0;
};

// H_s = Hom(theta^s, M (x) theta^s) with connecting maps f -> (f (x) theta)
// precomposed with theta^{s+1} = theta^s (x) theta. The tower must reach s_max.
EtaReport eta_stabilization(const TensorTower& tower, const RightModule& m, size_t s_max);

}  // namespace tcoh
