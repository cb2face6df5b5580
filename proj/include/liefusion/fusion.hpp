#pragma once

#include "liefusion/tensor.hpp"

#include <string>
#include <vector>

namespace liefusion {

enum class FusionMethod { Truncated, KacWalton };

struct FusionRule {
  std::int64_t level = 0;
  Weight charge;  // lambda
  Weight source;  // mu
  Weight target;  // nu
  Int value;
  FusionMethod method = FusionMethod::Truncated;
};

struct ConformalData {
  std::int64_t level = 0;
  Rat casimir;  // C_lambda = (lambda | lambda + 2 rho)
  Rat delta;    // C_lambda / (2 (level + dual Coxeter))
};

// P_+(g, l) in deterministic order (level, then labels).
std::vector<Weight> admissible_set(const RootSystem& R, std::int64_t l);

ConformalData conformal(const RootSystem& R, std::int64_t l, const Weight& lambda);
Rat delta_defect(const RootSystem& R, std::int64_t l, const Weight& lambda, const Weight& mu, const Weight& nu);

// Truncated tensor rule, valid for charges of level 1: N equals the
// classical multiplicity when nu is admissible at l, and 0 otherwise.
FusionRule fusion_unit_charge(const RootSystem& R, std::int64_t l, const Weight& lambda, const Weight& mu,
                              const Weight& nu);

// Kac-Walton: fold classical tensor multiplicities by the shifted affine
// Weyl group at level l + dual Coxeter.
std::map<Weight, Int> fusion_decompose(const RootSystem& R, std::int64_t l, const Weight& lambda,
                                       const Weight& mu);
FusionRule fusion_general(const RootSystem& R, std::int64_t l, const Weight& lambda, const Weight& mu,
                          const Weight& nu);

// Least superset of the generators closed under fusing with each generator.
std::set<Weight> fusion_closure(const RootSystem& R, std::int64_t l, const std::set<Weight>& generators);

// F4-specific rule for charge weight lambda_4 (value 0 or 1): requires
// nu - mu to be a nonzero weight of L(lambda_4); the rule is 1 iff every
// shifted weight space L(lambda_4)[nu - mu + (n_{mu,alpha}+1) alpha]
// vanishes over the simple roots alpha.
int fusion_rule_by_mult_vanishing(const Weight& mu, const Weight& nu);

struct LevelledAlgebra {
  LieType type;
  std::int64_t level;
};

// Sugawara central charge l dim(g) / (l + dual Coxeter).
Rat central_charge(const RootSystem& R, std::int64_t l);
// Discrete-series Virasoro central charge 1 - 6/(m(m+1)), m >= 2.
Rat virasoro_c(std::int64_t m);
// c(big) - sum c(parts); zero exactly for a conformal embedding.
Rat coset_defect(const LevelledAlgebra& big, const std::vector<LevelledAlgebra>& parts);

}  // namespace liefusion
