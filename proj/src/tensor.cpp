#include "liefusion/tensor.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace liefusion {

Decomposition decompose(const RootSystem& R, const Weight& lambda, const Weight& mu) {
  if (!lambda.is_dominant() || !mu.is_dominant())
    throw std::invalid_argument("decompose requires dominant weights");

  const Weight* small = &lambda;
  const Weight* big = &mu;
  if (weyl_dim(R, lambda) > weyl_dim(R, mu)) std::swap(small, big);

  const Weight rho = R.weyl_vector();
  const std::size_t n = static_cast<std::size_t>(R.rank());
  Decomposition dec{lambda, mu, {}};

  for (const auto& [xi, m] : expand_character(R, weight_system_cached(R, *small))) {
    Weight x = *big + xi + rho;
    int sign = 1;
    bool wall = false;
    while (true) {
      std::size_t i = 0;
      bool reflected = false;
      for (; i < n; ++i) {
        if (x[i] == 0) {  // on a reflection wall: contributes nothing
          wall = true;
          break;
        }
        if (x[i] < 0) {
          x = R.simple_reflect(static_cast<int>(i), x);
          sign = -sign;
          reflected = true;
          break;
        }
      }
      if (wall || !reflected) break;
    }
    if (wall) continue;
    Weight nu = x - rho;
    auto it = dec.components.find(nu);
    Int add = sign > 0 ? m : -m;
    if (it == dec.components.end())
      dec.components.emplace(nu, add);
    else
      it->second += add;
  }

  for (auto it = dec.components.begin(); it != dec.components.end();) {
    if (it->second == 0) {
      it = dec.components.erase(it);
    } else {
      if (it->second < 0) throw std::logic_error("Klimyk produced a negative multiplicity");
      ++it;
    }
  }
  return dec;
}

const Decomposition& decompose_cached(const RootSystem& R, const Weight& lambda, const Weight& mu) {
  static std::mutex mtx;
  static std::map<std::tuple<LieType, Weight, Weight>, std::unique_ptr<const Decomposition>> cache;
  Weight a = lambda, b = mu;
  if (b < a) std::swap(a, b);  // decomposition is symmetric in the factors
  std::scoped_lock lock(mtx);
  auto key = std::make_tuple(R.type(), a, b);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<const Decomposition>(decompose(R, a, b))).first;
  return *it->second;
}

Int hom_dim(const RootSystem& R, const Weight& lambda, const Weight& mu, const Weight& nu) {
  if (!nu.is_dominant()) return Int(0);
  const auto& dec = decompose_cached(R, lambda, mu);
  auto it = dec.components.find(nu);
  return it == dec.components.end() ? Int(0) : it->second;
}

}  // namespace liefusion
