#pragma once

#include "liefusion/linalg.hpp"
#include "liefusion/root_system.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace liefusion {

struct ModuleOptions {
  std::int64_t dim_cap = 400;
};

// A concrete irreducible highest-weight module: exact rational matrices for
// the Chevalley generators together with the unitary (Shapovalov) form. The
// basis is orthogonal but not normalized; the highest vector has norm 1, so
// the Gram matrix is diagonal with positive rational entries.
class ExplicitModule {
 public:
  static ExplicitModule build(const RootSystem& R, const Weight& lambda, const ModuleOptions& opts = {});

  const RootSystem& root_system() const { return *R_; }
  const Weight& highest_weight() const { return highest_; }
  std::int64_t dim() const { return static_cast<std::int64_t>(basis_weights_.size()); }

  const std::vector<Weight>& basis_weights() const { return basis_weights_; }
  const std::vector<Rat>& gram_diagonal() const { return gram_; }
  // Global basis indices of one weight space (empty if absent).
  const std::vector<int>& space(const Weight& w) const;

  const SparseMat& raising(int i) const { return E_[static_cast<std::size_t>(i)]; }
  const SparseMat& lowering(int i) const { return F_[static_cast<std::size_t>(i)]; }
  // Root vectors for arbitrary positive roots, built recursively through
  // commutators normalized by the Chevalley factor p+1.
  const SparseMat& raising(const Root& alpha) const;
  const SparseMat& lowering(const Root& alpha) const;

  RatVec basis_vector(int k) const;
  // Shapovalov pairing of two coordinate vectors.
  Rat form(const RatVec& x, const RatVec& y) const;
  // Coordinates of x restricted to one weight space (asserts x supported there).
  RatVec restrict_to(const Weight& w, const RatVec& x) const;

  // Used by the cache layer: reassemble a module from serialized parts.
  static ExplicitModule from_parts(const RootSystem& R, Weight highest, std::vector<Weight> basis_weights,
                                   std::vector<Rat> gram, std::vector<SparseMat> raising,
                                   std::vector<SparseMat> lowering);

 private:
  ExplicitModule() = default;

  const RootSystem* R_ = nullptr;
  Weight highest_;
  std::vector<Weight> basis_weights_;
  std::map<Weight, std::vector<int>> spaces_;
  std::vector<Rat> gram_;
  std::vector<SparseMat> E_, F_;  // one per simple root

  mutable std::unique_ptr<std::mutex> op_mutex_ = std::make_unique<std::mutex>();
  mutable std::map<std::size_t, SparseMat> raise_cache_, lower_cache_;
  const SparseMat& root_op(std::size_t root_index, bool raising) const;
  const SparseMat& root_op_locked(std::size_t root_index, bool raising) const;
};

struct Subspace {
  Weight weight;          // ambient weight space
  RatMatrix spanning;     // vectors in weight-space coordinates
  std::size_t rank = 0;
};

// K-space: span of F_alpha^{n_{mu,alpha}+1} u over simple alpha and basis
// vectors u of weight (nu - mu) + (n_{mu,alpha}+1) alpha.
Subspace kspace(const ExplicitModule& M, const Weight& mu, const Weight& nu);

// dim L(lambda)[nu-mu] - rank K; throws if the difference would be negative.
Int fusion_via_eq2(const ExplicitModule& M, const Weight& mu, const Weight& nu);

struct ZeroWeightReport {
  RatVec f3_v3, f4_v4, f5_v5;  // coordinates in the zero-weight space
  Rat norm_f3v3, norm_f4v4, norm_f5v5;
  Rat pair_34, pair_35;
  Rat gram_det_34, gram_det_35;
  Rat cos2_35;  // squared cosine of the angle between f3_v3 and f5_v5
};

// The two distinguished zero-weight bases of the 26-dimensional module.
ZeroWeightReport zero_weight_report(const ExplicitModule& M);

struct PairingReport {
  Rat norm1;      // <F_{rho3} F_alpha v | F_{rho3} F_alpha v>
  Rat norm2;      // <F_{rho4} F_beta v | F_{rho4} F_beta v>
  Rat cross_abs;  // |<F_{rho3} F_alpha v | F_{rho4} F_beta v>|
};

PairingReport appendix_b_report(const ExplicitModule& M);

// True iff some basis vector u of weight eta has E_alpha u outside the
// K-space of (mu0, nu0); alpha must be a positive root.
bool check_condition_iii(const ExplicitModule& M, const Weight& mu0, const Weight& nu0, const Root& alpha,
                         const Weight& eta);

// Shared 26-dimensional charge module L(lambda_4) of F4.
const ExplicitModule& f4_charge_module();

}  // namespace liefusion
