#pragma once

#include "liefusion/weight_system.hpp"

namespace liefusion {

struct Decomposition {
  Weight factor_a;
  Weight factor_b;
  std::map<Weight, Int> components;  // dominant highest weight -> multiplicity
};

// Tensor product decomposition by Klimyk's shifted-reflection rule,
// iterating over the smaller factor's weight system.
Decomposition decompose(const RootSystem& R, const Weight& lambda, const Weight& mu);

// Memoized variant (symmetric key).
const Decomposition& decompose_cached(const RootSystem& R, const Weight& lambda, const Weight& mu);

// dim Hom(L(lambda) (x) L(mu), L(nu)).
Int hom_dim(const RootSystem& R, const Weight& lambda, const Weight& mu, const Weight& nu);

}  // namespace liefusion
