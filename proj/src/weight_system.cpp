#include "liefusion/weight_system.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace liefusion {

Int WeightSystem::mult_of(const RootSystem& R, const Weight& mu) const {
  Weight dom = R.dominant_rep(mu);
  auto it = dominant_mults_.find(dom);
  return it == dominant_mults_.end() ? Int(0) : it->second;
}

namespace {

// True when lambda - mu is a nonnegative integer combination of simple roots.
bool below(const RootSystem& R, const Weight& lambda, const Weight& mu) {
  std::vector<std::int64_t> c;
  try {
    c = R.root_coords(lambda - mu);
  } catch (const std::invalid_argument&) {
    return false;
  }
  return std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v >= 0; });
}

}  // namespace

WeightSystem weight_system(const RootSystem& R, const Weight& lambda) {
  if (!lambda.is_dominant()) throw std::invalid_argument("weight_system requires a dominant weight");
  const std::size_t n = static_cast<std::size_t>(R.rank());

  // Enumerate the full support by walking down simple-root steps; a weight
  // belongs to the support iff its dominant representative lies below lambda.
  std::set<Weight> support;
  std::deque<Weight> queue;
  support.insert(lambda);
  queue.push_back(lambda);
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      Weight next = w - R.simple_root(static_cast<int>(i)).dynkin;
      if (support.count(next)) continue;
      if (!below(R, lambda, R.dominant_rep(next))) continue;
      support.insert(next);
      queue.push_back(next);
    }
  }

  std::vector<Weight> dominants;
  for (const auto& w : support)
    if (w.is_dominant()) dominants.push_back(w);
  std::sort(dominants.begin(), dominants.end(), [&](const Weight& a, const Weight& b) {
    std::int64_t ha = R.root_height(lambda - a), hb = R.root_height(lambda - b);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  const Weight rho = R.weyl_vector();
  std::map<Weight, Int> mults;
  mults[lambda] = 1;
  for (const auto& mu : dominants) {
    if (mu == lambda) continue;
    Rat numer(0);
    for (const Root& alpha : R.positive_roots()) {
      // Weights along the alpha string above mu form an unbroken chain.
      for (std::int64_t k = 1;; ++k) {
        Weight xi = mu + k * alpha.dynkin;
        Weight dom = R.dominant_rep(xi);
        auto it = mults.find(dom);
        if (it == mults.end()) break;
        numer += Rat(it->second) * R.inner(xi, alpha.dynkin);
      }
    }
    Rat denom = R.inner(lambda + mu + 2 * rho, lambda - mu);
    if (denom == 0) throw std::logic_error("Freudenthal denominator vanished");
    Rat m = 2 * numer / denom;
    Int mi = rat_to_int(m);
    if (mi <= 0) throw std::logic_error("Freudenthal produced a nonpositive multiplicity");
    mults[mu] = mi;
  }

  Int total(0);
  for (const auto& [mu, m] : mults) total += m * Int(weyl_orbit(R, mu).size());
  return WeightSystem(lambda, std::move(mults), total);
}

const WeightSystem& weight_system_cached(const RootSystem& R, const Weight& lambda) {
  static std::mutex mu;
  static std::map<std::pair<LieType, Weight>, std::unique_ptr<const WeightSystem>> cache;
  std::scoped_lock lock(mu);
  auto key = std::make_pair(R.type(), lambda);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<const WeightSystem>(weight_system(R, lambda))).first;
  return *it->second;
}

Int weyl_dim(const RootSystem& R, const Weight& lambda) {
  if (!lambda.is_dominant()) throw std::invalid_argument("weyl_dim requires a dominant weight");
  const Weight rho = R.weyl_vector();
  Rat prod(1);
  for (const Root& alpha : R.positive_roots())
    prod *= R.inner(lambda + rho, alpha.dynkin) / R.inner(rho, alpha.dynkin);
  Int d = rat_to_int(prod);
  if (d <= 0) throw std::logic_error("Weyl dimension formula returned a nonpositive value");
  return d;
}

Int multiplicity(const RootSystem& R, const Weight& lambda, const Weight& mu) {
  return weight_system_cached(R, lambda).mult_of(R, mu);
}

std::set<Weight> weyl_orbit(const RootSystem& R, const Weight& mu) {
  std::set<Weight> orbit{mu};
  std::deque<Weight> queue{mu};
  const int n = R.rank();
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Weight next = R.simple_reflect(i, w);
      if (orbit.insert(next).second) queue.push_back(next);
    }
  }
  return orbit;
}

std::map<Weight, Int> expand_character(const RootSystem& R, const WeightSystem& ws) {
  std::map<Weight, Int> chi;
  for (const auto& [mu, m] : ws.dominant_mults())
    for (const Weight& w : weyl_orbit(R, mu)) chi[w] = m;
  return chi;
}

}  // namespace liefusion
