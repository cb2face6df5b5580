#include "liefusion/fusion.hpp"

#include <algorithm>
#include <stdexcept>

namespace liefusion {

namespace {

void enumerate_admissible(const RootSystem& R, std::int64_t budget, std::size_t i,
                          std::vector<std::int64_t>& labels, std::vector<Weight>& out) {
  const std::size_t n = static_cast<std::size_t>(R.rank());
  if (i == n) {
    out.push_back(Weight(labels));
    return;
  }
  Weight fw = Weight::fundamental(n, i);
  std::int64_t comark = R.level(fw);
  for (std::int64_t v = 0; v * comark <= budget; ++v) {
    labels[i] = v;
    enumerate_admissible(R, budget - v * comark, i + 1, labels, out);
  }
  labels[i] = 0;
}

}  // namespace

std::vector<Weight> admissible_set(const RootSystem& R, std::int64_t l) {
  if (l < 0) throw std::invalid_argument("level must be nonnegative");
  std::vector<std::int64_t> labels(static_cast<std::size_t>(R.rank()), 0);
  std::vector<Weight> out;
  enumerate_admissible(R, l, 0, labels, out);
  std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
    auto la = R.level(a), lb = R.level(b);
    if (la != lb) return la < lb;
    return a < b;
  });
  return out;
}

ConformalData conformal(const RootSystem& R, std::int64_t l, const Weight& lambda) {
  if (!lambda.is_dominant()) throw std::invalid_argument("conformal requires a dominant weight");
  ConformalData c;
  c.level = l;
  c.casimir = R.inner(lambda, lambda + 2 * R.weyl_vector());
  c.delta = c.casimir / Rat(2 * (l + R.dual_coxeter()));
  return c;
}

Rat delta_defect(const RootSystem& R, std::int64_t l, const Weight& lambda, const Weight& mu,
                 const Weight& nu) {
  return conformal(R, l, lambda).delta + conformal(R, l, mu).delta - conformal(R, l, nu).delta;
}

FusionRule fusion_unit_charge(const RootSystem& R, std::int64_t l, const Weight& lambda, const Weight& mu,
                              const Weight& nu) {
  if (R.level(lambda) != 1)
    throw std::invalid_argument("fusion_unit_charge requires a charge of level 1; use fusion_general");
  if (!R.is_admissible(mu, l)) throw std::invalid_argument("source weight is not admissible at this level");
  if (!nu.is_dominant()) throw std::invalid_argument("target weight must be dominant");
  FusionRule rule{l, lambda, mu, nu, Int(0), FusionMethod::Truncated};
  if (R.is_admissible(nu, l)) rule.value = hom_dim(R, lambda, mu, nu);
  return rule;
}

std::map<Weight, Int> fusion_decompose(const RootSystem& R, std::int64_t l, const Weight& lambda,
                                       const Weight& mu) {
  if (!R.is_admissible(lambda, l) || !R.is_admissible(mu, l))
    throw std::invalid_argument("fusion requires weights admissible at the given level");

  const Weight* small = &lambda;
  const Weight* big = &mu;
  if (weyl_dim(R, lambda) > weyl_dim(R, mu)) std::swap(small, big);

  const Weight rho = R.weyl_vector();
  const Weight theta = R.theta().dynkin;
  const std::int64_t shifted = l + R.dual_coxeter();
  const std::size_t n = static_cast<std::size_t>(R.rank());
  std::map<Weight, Int> out;

  for (const auto& [xi, m] : expand_character(R, weight_system_cached(R, *small))) {
    Weight x = *big + xi + rho;
    int sign = 1;
    bool wall = false;
    while (true) {
      bool acted = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) {
          wall = true;
          break;
        }
        if (x[i] < 0) {
          x = R.simple_reflect(static_cast<int>(i), x);
          sign = -sign;
          acted = true;
          break;
        }
      }
      if (wall) break;
      if (acted) continue;
      std::int64_t t = R.level(x);
      if (t == shifted) {
        wall = true;
        break;
      }
      if (t > shifted) {
        x = x - (t - shifted) * theta;  // affine reflection at (x|theta) = shifted
        sign = -sign;
        continue;
      }
      break;
    }
    if (wall) continue;
    Weight nu = x - rho;
    auto it = out.find(nu);
    Int add = sign > 0 ? m : -m;
    if (it == out.end())
      out.emplace(nu, add);
    else
      it->second += add;
  }

  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0) {
      it = out.erase(it);
    } else {
      if (it->second < 0) throw std::logic_error("Kac-Walton fold produced a negative multiplicity");
      ++it;
    }
  }
  return out;
}

FusionRule fusion_general(const RootSystem& R, std::int64_t l, const Weight& lambda, const Weight& mu,
                          const Weight& nu) {
  if (!nu.is_dominant()) throw std::invalid_argument("target weight must be dominant");
  FusionRule rule{l, lambda, mu, nu, Int(0), FusionMethod::KacWalton};
  auto dec = fusion_decompose(R, l, lambda, mu);
  if (R.is_admissible(nu, l)) {
    auto it = dec.find(nu);
    if (it != dec.end()) rule.value = it->second;
  }
  return rule;
}

std::set<Weight> fusion_closure(const RootSystem& R, std::int64_t l, const std::set<Weight>& generators) {
  for (const auto& g : generators)
    if (!R.is_admissible(g, l)) throw std::invalid_argument("generator not admissible at this level");
  bool unit_level = std::all_of(generators.begin(), generators.end(),
                                [&](const Weight& g) { return R.level(g) == 1; });
  std::set<Weight> closed = generators;
  const auto candidates = admissible_set(R, l);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Weight> snapshot(closed.begin(), closed.end());
    for (const Weight& g : generators) {
      for (const Weight& mu : snapshot) {
        if (unit_level) {
          for (const Weight& nu : candidates) {
            if (closed.count(nu)) continue;
            if (fusion_unit_charge(R, l, g, mu, nu).value > 0) {
              closed.insert(nu);
              grew = true;
            }
          }
        } else {
          for (const auto& [nu, m] : fusion_decompose(R, l, g, mu)) {
            (void)m;
            if (closed.insert(nu).second) grew = true;
          }
        }
      }
    }
  }
  return closed;
}

int fusion_rule_by_mult_vanishing(const Weight& mu, const Weight& nu) {
  const RootSystem& R = f4();
  if (!mu.is_dominant() || !nu.is_dominant())
    throw std::invalid_argument("the rule criterion requires dominant weights");
  const Weight charge = Weight({0, 0, 0, 1});
  Weight diff = nu - mu;
  if (diff.is_zero() || multiplicity(R, charge, diff) == 0)
    throw std::invalid_argument("nu - mu must be a nonzero weight of the 26-dimensional module");
  for (int i = 0; i < 4; ++i) {
    const Root& alpha = R.simple_root(i);
    std::int64_t shift = mu[static_cast<std::size_t>(i)] + 1;
    Weight probe = diff + shift * alpha.dynkin;
    if (multiplicity(R, charge, probe) != 0) return 0;
  }
  return 1;
}

Rat central_charge(const RootSystem& R, std::int64_t l) {
  if (l <= 0) throw std::invalid_argument("level must be positive");
  return Rat(l * R.dimension(), l + R.dual_coxeter());
}

Rat virasoro_c(std::int64_t m) {
  if (m < 2) throw std::invalid_argument("discrete series index must be >= 2");
  return Rat(1) - Rat(6, m * (m + 1));
}

Rat coset_defect(const LevelledAlgebra& big, const std::vector<LevelledAlgebra>& parts) {
  Rat c = central_charge(shared_root_system(big.type), big.level);
  for (const auto& p : parts) c -= central_charge(shared_root_system(p.type), p.level);
  return c;
}

}  // namespace liefusion
