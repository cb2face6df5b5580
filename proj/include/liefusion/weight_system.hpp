#pragma once

#include "liefusion/root_system.hpp"

#include <map>
#include <set>

namespace liefusion {

// Weight multiplicities of one irreducible highest-weight module. Only
// dominant-chamber multiplicities are stored; arbitrary weights are looked
// up through their dominant Weyl representative.
class WeightSystem {
 public:
  WeightSystem(Weight highest, std::map<Weight, Int> dominant_mults, Int total_dim)
      : highest_(std::move(highest)), dominant_mults_(std::move(dominant_mults)), total_dim_(std::move(total_dim)) {}

  const Weight& highest_weight() const { return highest_; }
  const std::map<Weight, Int>& dominant_mults() const { return dominant_mults_; }
  const Int& total_dim() const { return total_dim_; }

  // Multiplicity of an arbitrary weight (0 outside the support).
  Int mult_of(const RootSystem& R, const Weight& mu) const;

 private:
  Weight highest_;
  std::map<Weight, Int> dominant_mults_;
  Int total_dim_;
};

// Freudenthal recursion; lambda must be dominant integral.
WeightSystem weight_system(const RootSystem& R, const Weight& lambda);

// Process-wide memoized variant keyed by (type, lambda).
const WeightSystem& weight_system_cached(const RootSystem& R, const Weight& lambda);

// Weyl dimension formula; independent of weight_system.
Int weyl_dim(const RootSystem& R, const Weight& lambda);

Int multiplicity(const RootSystem& R, const Weight& lambda, const Weight& mu);

std::set<Weight> weyl_orbit(const RootSystem& R, const Weight& mu);

// Full character: every weight of the system with its multiplicity.
std::map<Weight, Int> expand_character(const RootSystem& R, const WeightSystem& ws);

}  // namespace liefusion
