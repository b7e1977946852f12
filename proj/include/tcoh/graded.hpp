#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tcoh/module.hpp"
#include "tcoh/purity.hpp"
#include "tcoh/tensor.hpp"

namespace tcoh {

struct TowerOptions {
  bool waive_purity = false;
  size_t gldim_bound = 2;
};

// T = A + sigma + sigma^2 + ... truncated at degree cap. sigma^k is the
// left-associated quotient sigma^{k-1} (x)_A sigma.
class TensorTower {
 public:
  // Checks purity of every stage unless waived; a failure throws PurityError.
  TensorTower(const Bimodule& sigma, size_t cap, TowerOptions opts = {});

  const AlgebraPtr& algebra() const { return sigma_.algebra(); }
  const Field& field() const { return sigma_.field(); }
  const Bimodule& sigma() const { return sigma_; }
  size_t cap() const { return powers_.size() - 1; }
  const Bimodule& power(size_t k) const { return powers_.at(k); }
  std::vector<size_t> dims() const;

  // u -> u (x) e_delta, sigma^k -> sigma^{k+1}.
  const Matrix& step(size_t k, size_t delta) const { return steps_.at(k).at(delta); }
  // Basis element z of sigma^k (k >= 1) is the class of first (x) second.
  std::pair<Vector, Vector> representative(size_t k, size_t z) const;

  // Product of x in sigma^i and y in sigma^j.
  Vector mult(size_t i, const Vector& x, size_t j, const Vector& y) const;
  // Matrix of y -> f y, sigma^b -> sigma^{b+c}, for f in sigma^c.
  Matrix left_mult_matrix(size_t c, const Vector& f, size_t b) const;

  // Stages verified pure, and whether the purity requirement was waived.
  const std::vector<PurityStage>& ledger() const { return ledger_; }
  bool purity_waived() const { return waived_; }

  void extend_to(size_t new_cap, TowerOptions opts = {});

 private:
  Bimodule sigma_;
  std::vector<Bimodule> powers_;
  std::vector<std::shared_ptr<const TensorProduct>> products_;  // [k] = sigma^{k-1} (x) sigma, k >= 2
  std::vector<std::vector<Matrix>> steps_;
  std::vector<PurityStage> ledger_;
  bool waived_ = false;
};

// Copy of t extended to new_cap; idempotent when new_cap = cap.
TensorTower tower_extend(const TensorTower& t, size_t new_cap, TowerOptions opts = {});

// Graded right T-module truncated at the tower cap: per-degree modules and
// the single steps X_s -> X_{s+1}, x -> mu(x (x) e_delta).
struct GradedModule {
  std::shared_ptr<const TensorTower> tower;
  std::vector<RightModule> parts;               // degrees 0..cap
  std::vector<std::vector<Matrix>> steps;       // steps[s][delta], s < cap

  size_t top() const { return parts.size() - 1; }
  std::vector<size_t> dims() const;
};

// Matrix of w -> mu(x (x) w), sigma^n -> X_{m+n}, for x in X_m.
Matrix mu_table(const GradedModule& g, size_t m, const Vector& x, size_t n);
// The same tables for every n' <= n.
std::vector<Matrix> mu_tables(const GradedModule& g, size_t m, const Vector& x, size_t n);
// mu_{X,m,n} : X_m (x) sigma^n -> X_{m+n} in the basis of tp = X_m (x) sigma^n.
Matrix mu_map(const GradedModule& g, size_t m, size_t n, const TensorProduct& tp);
Matrix mu_map(const GradedModule& g, size_t m, size_t n);
// mu_{X,s,1} is bijective: surjective with dim X_s (x) sigma = dim X_{s+1}.
bool mu_is_iso(const GradedModule& g, size_t s);

// Sum of shifted summands e_v T(-d); v = -1 means all of T(-d).
struct GradedSummand {
  long vertex = -1;
  size_t degree = 0;
};

class GradedProjective {
 public:
  GradedProjective() = default;
  GradedProjective(std::shared_ptr<const TensorTower> tower, std::vector<GradedSummand> summands);
  static GradedProjective free(std::shared_ptr<const TensorTower> tower, const std::vector<size_t>& degrees);

  const std::vector<GradedSummand>& summands() const { return summands_; }
  const std::shared_ptr<const TensorTower>& tower() const { return tower_; }
  size_t min_degree() const;
  size_t max_degree() const;
  // Degree-s part of summand i as a subspace of sigma^{s-d_i} (empty when s < d_i).
  const Subspace* block(size_t i, size_t s) const;
  size_t offset(size_t i, size_t s) const { return offsets_.at(s).at(i); }
  size_t dim(size_t s) const { return offsets_.at(s).back(); }
  const GradedModule& module() const { return module_; }
  // Element of P_s with component y (in sigma^{s - d_i}) on summand i.
  Vector embed(size_t i, size_t s, const Vector& y) const;
  Vector component(const Vector& x, size_t i, size_t s) const;

 private:
  std::shared_ptr<const TensorTower> tower_;
  std::vector<GradedSummand> summands_;
  std::vector<std::vector<Subspace>> blocks_;   // [s][i]
  std::vector<std::vector<size_t>> offsets_;    // [s][i], last = total
  GradedModule module_;
};

// Graded map P -> Q. Entry (j, i) is the element f_{ji} of sigma^{d_i - d_j}
// with f(g_i) = sum_j g_j f_{ji}.
struct GradedMapEntry {
  size_t target = 0;
  size_t source = 0;
  Vector value;
};

struct GradedMap {
  GradedProjective source;
  GradedProjective target;
  std::vector<GradedMapEntry> entries;

  // f_s : P_s -> Q_s
  Matrix slice(size_t s) const;
};

struct KernelDegree {
  size_t degree = 0;
  size_t dim_p = 0, dim_q = 0, dim_k = 0, dim_i = 0, dim_c = 0;
  std::vector<Vector> new_generators;  // in P_s coordinates
  std::optional<bool> mu_k_iso;        // mu_{K,s,1}, s < D
  std::optional<bool> mu_c_iso;
};

struct GradedKernel {
  size_t cap = 0;
  GradedModule kernel, image, cokernel;
  std::vector<Subspace> kernel_spaces;  // inside P_s
  std::vector<Subspace> image_spaces;   // inside Q_s
  std::vector<KernelDegree> degrees;
  std::vector<size_t> generator_degrees;  // with multiplicity
  // Least d with mu_{K,s,1} bijective for d <= s < D; empty when none.
  std::optional<size_t> stabilization;
};

GradedKernel graded_kernel(const GradedMap& f, size_t D);

// Seeded random graded map between free modules with generator degrees in
// [0, max_degree] and small coordinates.
GradedMap random_graded_map(std::shared_ptr<const TensorTower> tower, std::mt19937_64& rng, size_t max_degree,
                            size_t max_generators = 2);

// ---------------------------------------------------------------------------

enum class Verdict { CertifiedFlatPath, BoundedEvidence, HypothesisFailure };
std::string verdict_name(Verdict v);

struct TorEvidence {
  size_t q = 0;
  std::optional<size_t> n;  // least n with the obligations on C_{q+n}
  // tor_dims[n][m-1][i-1] = dim Tor_i(C_{q+n}, sigma^m)
  std::vector<std::vector<std::vector<size_t>>> tor_dims;
};

struct MapCertificate {
  std::vector<size_t> source_degrees, target_degrees;
  size_t p = 0, q = 0;
  GradedKernel kernel;
  size_t max_generator_degree = 0;
  bool generators_within_q = true;
  TorEvidence evidence;
};

struct CoherenceCertificate {
  size_t cap = 0;
  size_t gldim_bound = 0;
  bool flat = false;
  std::vector<std::vector<size_t>> flat_tor_dims;  // [v][i-1] = dim Tor_i(S_v, sigma)
  std::optional<PurityReport> purity;
  Verdict verdict = Verdict::BoundedEvidence;
  std::optional<PurityWitness> witness;
  std::vector<MapCertificate> maps;
  bool all_stabilized = true;
  std::optional<uint64_t> seed;
};

// sigma is flat as a left module when Tor_1(S, sigma) = 0 for every simple S.
bool flat_test(const Bimodule& sigma, size_t gldim_bound, std::vector<std::vector<size_t>>* dims = nullptr);

CoherenceCertificate coherence_check(std::shared_ptr<const TensorTower> tower, const std::vector<GradedMap>& maps,
                                     size_t D, size_t gldim_bound);

// ---------------------------------------------------------------------------

// M (x)_A T truncated at the tower cap.
GradedModule tensor_with_tower(const RightModule& m, std::shared_ptr<const TensorTower> tower);
// Simple A-module at v placed in degree 0.
GradedModule graded_simple(std::shared_ptr<const TensorTower> tower, size_t v);

struct GradedResolutionTerm {
  std::vector<GradedSummand> summands;
  std::vector<size_t> kernel_dims;  // dims of the kernel of the cover, by degree
};

struct GradedResolution {
  size_t cap = 0;
  size_t length_bound = 0;
  std::vector<GradedResolutionTerm> terms;
  std::vector<std::vector<size_t>> slice_dims;  // [i][s] = dim of term i in degree s
  bool terminated = false;                      // last kernel vanishes in all degrees <= cap
  size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }
};

GradedResolution graded_resolution(const GradedModule& x, size_t length_bound);

// free(r): A^r with diagonal actions; bar: A (x)_k A with outer actions.
Bimodule make_free_instance(AlgebraPtr alg, size_t r);
Bimodule make_bar_instance(AlgebraPtr alg);

}  // namespace tcoh
