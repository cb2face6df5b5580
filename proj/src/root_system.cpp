#include "liefusion/root_system.hpp"

#include "liefusion/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

namespace liefusion {

namespace {

OrthoVec unit(std::size_t dim, std::size_t i, const Rat& v = Rat(1)) {
  OrthoVec e = OrthoVec::zero(dim);
  e.coords[i] = v;
  return e;
}

// Simple-root realizations. Coordinates are chosen so that every entry is
// rational and, together with the form scale, the highest root has squared
// length 2.
void realize(const LieType& t, std::vector<OrthoVec>& simple, std::size_t& dim, Rat& scale) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  scale = Rat(1);
  switch (t.family) {
    case Family::A: {
      dim = n + 1;
      for (std::size_t i = 0; i < n; ++i) {
        OrthoVec a = OrthoVec::zero(dim);
        a.coords[i] = 1;
        a.coords[i + 1] = -1;
        simple.push_back(a);
      }
      break;
    }
    case Family::B: {
      dim = n;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        OrthoVec a = OrthoVec::zero(dim);
        a.coords[i] = 1;
        a.coords[i + 1] = -1;
        simple.push_back(a);
      }
      simple.push_back(unit(dim, n - 1));
      break;
    }
    case Family::C: {
      dim = n;
      scale = Rat(1, 2);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        OrthoVec a = OrthoVec::zero(dim);
        a.coords[i] = 1;
        a.coords[i + 1] = -1;
        simple.push_back(a);
      }
      simple.push_back(unit(dim, n - 1, Rat(2)));
      break;
    }
    case Family::D: {
      dim = n;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        OrthoVec a = OrthoVec::zero(dim);
        a.coords[i] = 1;
        a.coords[i + 1] = -1;
        simple.push_back(a);
      }
      OrthoVec a = OrthoVec::zero(dim);
      a.coords[n - 2] = 1;
      a.coords[n - 1] = 1;
      simple.push_back(a);
      break;
    }
    case Family::E: {
      dim = 8;
      OrthoVec a1 = OrthoVec::zero(dim);
      a1.coords = {Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2),
                   Rat(-1, 2), Rat(-1, 2), Rat(-1, 2), Rat(1, 2)};
      OrthoVec a2 = OrthoVec::zero(dim);
      a2.coords[0] = 1;
      a2.coords[1] = 1;
      simple.push_back(a1);
      simple.push_back(a2);
      for (std::size_t i = 0; i + 2 < n; ++i) {
        OrthoVec a = OrthoVec::zero(dim);
        a.coords[i] = -1;
        a.coords[i + 1] = 1;
        simple.push_back(a);
      }
      break;
    }
    case Family::F: {
      dim = 4;
      OrthoVec r1 = OrthoVec::zero(dim), r2 = OrthoVec::zero(dim), r3 = OrthoVec::zero(dim), r4 = OrthoVec::zero(dim);
      r1.coords = {Rat(0), Rat(1), Rat(-1), Rat(0)};
      r2.coords = {Rat(0), Rat(0), Rat(1), Rat(-1)};
      r3.coords = {Rat(0), Rat(0), Rat(0), Rat(1)};
      r4.coords = {Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)};
      simple = {r1, r2, r3, r4};
      break;
    }
    case Family::G: {
      dim = 3;
      scale = Rat(1, 3);
      OrthoVec a1 = OrthoVec::zero(dim), a2 = OrthoVec::zero(dim);
      a1.coords = {Rat(1), Rat(-1), Rat(0)};
      a2.coords = {Rat(-2), Rat(1), Rat(1)};
      simple = {a1, a2};
      break;
    }
  }
}

}  // namespace

LieType LieType::parse(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("bad Lie type name: " + name);
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  if (std::string("ABCDEFG").find(f) == std::string::npos)
    throw std::invalid_argument("unknown Lie family in: " + name);
  int r = 0;
  try {
    std::size_t pos = 0;
    r = std::stoi(name.substr(1), &pos);
    if (pos + 1 != name.size()) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("bad rank in Lie type name: " + name);
  }
  LieType t{static_cast<Family>(f), r};
  t.validate();
  return t;
}

std::string LieType::name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

void LieType::validate() const {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank == 6 || rank == 7 || rank == 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok)
    throw std::invalid_argument("unsupported family/rank combination: " +
                                std::string(1, static_cast<char>(family)) + std::to_string(rank));
}

RootSystem RootSystem::build(const LieType& t) {
  t.validate();
  RootSystem R;
  R.type_ = t;
  const std::size_t n = static_cast<std::size_t>(t.rank);

  std::vector<OrthoVec> simple;
  realize(t, simple, R.ambient_dim_, R.form_scale_);

  auto inner_vec = [&](const OrthoVec& a, const OrthoVec& b) { return R.form_scale_ * dot(a, b); };

  // Generate positive roots by closure from the simple roots, one height
  // level at a time. Candidate beta + alpha_i is a root iff the alpha_i
  // string through beta extends upwards: p - n_{beta,alpha_i} > 0.
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::pair<std::vector<std::int64_t>, OrthoVec>> roots;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> c(n, 0);
    c[i] = 1;
    seen.insert(c);
    roots.emplace_back(c, simple[i]);
  }
  std::size_t level_begin = 0;
  while (level_begin < roots.size()) {
    std::size_t level_end = roots.size();
    for (std::size_t k = level_begin; k < level_end; ++k) {
      auto [c, vec] = roots[k];
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::int64_t> cand = c;
        cand[i] += 1;
        if (seen.count(cand)) continue;
        Rat nba = 2 * inner_vec(vec, simple[i]) / inner_vec(simple[i], simple[i]);
        std::int64_t p = 0;
        std::vector<std::int64_t> down = c;
        while (true) {
          down[i] -= 1;
          bool valid = std::all_of(down.begin(), down.end(), [](std::int64_t v) { return v >= 0; });
          if (valid && std::any_of(down.begin(), down.end(), [](std::int64_t v) { return v > 0; }) &&
              seen.count(down)) {
            ++p;
          } else {
            break;
          }
        }
        if (Rat(p) - nba > 0) {
          seen.insert(cand);
          roots.emplace_back(cand, vec + simple[i]);
        }
      }
    }
    level_begin = level_end;
  }

  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    std::int64_t ha = 0, hb = 0;
    for (auto v : a.first) ha += v;
    for (auto v : b.first) hb += v;
    if (ha != hb) return ha < hb;
    return a.first > b.first;  // descending lex keeps simple root i at index i
  });

  // Cartan matrix and its inverse.
  R.cartan_.assign(n, std::vector<std::int64_t>(n, 0));
  RatMatrix cartan_rat(n, RatVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat v = 2 * inner_vec(simple[j], simple[i]) / inner_vec(simple[i], simple[i]);
      R.cartan_[i][j] = to_int64(rat_to_int(v));
      cartan_rat[i][j] = v;
    }
  R.cartan_inv_ = inverse(cartan_rat);

  // Fundamental weights: lambda_i = sum_k cartan_inv[k][i] * alpha_k.
  for (std::size_t i = 0; i < n; ++i) {
    OrthoVec w = OrthoVec::zero(R.ambient_dim_);
    for (std::size_t k = 0; k < n; ++k) w = w + R.cartan_inv_[k][i] * simple[k];
    R.fundamental_weights_.push_back(w);
  }

  R.form_matrix_.assign(n, RatVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      R.form_matrix_[i][j] = inner_vec(R.fundamental_weights_[i], R.fundamental_weights_[j]);

  // Assemble root records.
  for (std::size_t k = 0; k < roots.size(); ++k) {
    Root rt;
    rt.simple_coords = roots[k].first;
    rt.vec = roots[k].second;
    rt.height = 0;
    for (auto v : rt.simple_coords) rt.height += v;
    rt.norm2 = inner_vec(rt.vec, rt.vec);
    std::vector<std::int64_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rat v = 2 * inner_vec(rt.vec, simple[i]) / inner_vec(simple[i], simple[i]);
      labels[i] = to_int64(rat_to_int(v));
    }
    rt.dynkin = Weight(labels);
    R.root_by_dynkin_[rt.dynkin] = k;
    R.positive_roots_.push_back(std::move(rt));
  }

  if (R.positive_roots_.back().norm2 != 2)
    throw std::logic_error("realization failure: (theta|theta) != 2 for " + t.name());

  // Weyl vector, both as sum of fundamental weights and half-sum of roots.
  OrthoVec rho = OrthoVec::zero(R.ambient_dim_);
  for (const auto& w : R.fundamental_weights_) rho = rho + w;
  OrthoVec half_sum = OrthoVec::zero(R.ambient_dim_);
  for (const auto& rt : R.positive_roots_) half_sum = half_sum + rt.vec;
  half_sum = Rat(1, 2) * half_sum;
  if (!(rho == half_sum))
    throw std::logic_error("realization failure: Weyl vector mismatch for " + t.name());
  R.weyl_vector_ = rho;

  const OrthoVec& theta = R.positive_roots_.back().vec;
  for (std::size_t i = 0; i < n; ++i)
    R.comarks_.push_back(to_int64(rat_to_int(inner_vec(R.fundamental_weights_[i], theta))));
  R.dual_coxeter_ = 1 + to_int64(rat_to_int(inner_vec(rho, theta)));
  R.dimension_ = static_cast<std::int64_t>(n) + 2 * static_cast<std::int64_t>(R.positive_roots_.size());
  return R;
}

Rat RootSystem::inner(const OrthoVec& x, const OrthoVec& y) const {
  if (x.dim() != ambient_dim_ || y.dim() != ambient_dim_)
    throw std::invalid_argument("dimension mismatch in inner product");
  return form_scale_ * dot(x, y);
}

Rat RootSystem::inner(const Weight& x, const Weight& y) const {
  const std::size_t n = static_cast<std::size_t>(rank());
  if (x.rank() != n || y.rank() != n) throw std::invalid_argument("dimension mismatch in inner product");
  Rat s(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      s += Rat(x[i]) * Rat(y[j]) * form_matrix_[i][j];
    }
  }
  return s;
}

Rat RootSystem::inner(const Weight& x, const OrthoVec& y) const { return inner(to_orthogonal(x), y); }

Rat RootSystem::pairing(const OrthoVec& x, const Root& alpha) const {
  return 2 * inner(x, alpha.vec) / alpha.norm2;
}

std::int64_t RootSystem::pairing(const Weight& x, const Root& alpha) const {
  Rat v = 2 * inner(x, alpha.vec) / alpha.norm2;
  return to_int64(rat_to_int(v));
}

OrthoVec RootSystem::reflect(const Root& alpha, const OrthoVec& x) const {
  return x - (pairing(x, alpha) * alpha.vec);
}

Weight RootSystem::reflect(const Root& alpha, const Weight& x) const {
  return x - pairing(x, alpha) * alpha.dynkin;
}

Weight RootSystem::simple_reflect(int i, const Weight& x) const {
  const std::size_t n = static_cast<std::size_t>(rank());
  Weight r = x;
  std::int64_t c = x[static_cast<std::size_t>(i)];
  if (c == 0) return r;
  for (std::size_t k = 0; k < n; ++k) r[k] -= c * cartan_[k][static_cast<std::size_t>(i)];
  return r;
}

OrthoVec RootSystem::to_orthogonal(const Weight& w) const {
  if (w.rank() != static_cast<std::size_t>(rank())) throw std::invalid_argument("weight rank mismatch");
  OrthoVec v = OrthoVec::zero(ambient_dim_);
  for (std::size_t i = 0; i < w.rank(); ++i)
    if (w[i] != 0) v = v + Rat(w[i]) * fundamental_weights_[i];
  return v;
}

Weight RootSystem::from_orthogonal(const OrthoVec& v) const {
  if (v.dim() != ambient_dim_) throw std::invalid_argument("dimension mismatch");
  const std::size_t n = static_cast<std::size_t>(rank());
  std::vector<std::int64_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Root& a = simple_root(static_cast<int>(i));
    Rat p = 2 * inner(v, a.vec) / a.norm2;
    if (!is_integer(p)) throw std::invalid_argument("vector is not integral in the Dynkin basis");
    labels[i] = to_int64(numerator(p));
  }
  Weight w{labels};
  if (!(to_orthogonal(w) == v)) throw std::invalid_argument("vector is not in the realized weight lattice");
  return w;
}

std::int64_t RootSystem::level(const Weight& w) const {
  if (w.rank() != static_cast<std::size_t>(rank())) throw std::invalid_argument("weight rank mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w.rank(); ++i) s += w[i] * comarks_[i];
  return s;
}

std::optional<std::pair<std::size_t, int>> RootSystem::root_lookup(const OrthoVec& v) const {
  for (int sign : {+1, -1}) {
    OrthoVec cand = sign > 0 ? v : -v;
    Weight labels;
    try {
      labels = from_orthogonal(cand);
    } catch (const std::invalid_argument&) {
      continue;
    }
    auto it = root_by_dynkin_.find(labels);
    if (it != root_by_dynkin_.end()) return std::make_pair(it->second, sign);
  }
  return std::nullopt;
}

std::optional<std::size_t> RootSystem::positive_root_index(const Weight& dynkin_labels) const {
  auto it = root_by_dynkin_.find(dynkin_labels);
  if (it == root_by_dynkin_.end()) return std::nullopt;
  return it->second;
}

Weight RootSystem::dominant_rep(const Weight& w, int* det, bool* on_wall) const {
  Weight x = w;
  int sign = 1;
  const std::size_t n = static_cast<std::size_t>(rank());
  while (true) {
    std::size_t i = 0;
    for (; i < n; ++i)
      if (x[i] < 0) break;
    if (i == n) break;
    x = simple_reflect(static_cast<int>(i), x);
    sign = -sign;
  }
  if (det) *det = sign;
  if (on_wall) *on_wall = std::any_of(x.labels.begin(), x.labels.end(), [](std::int64_t v) { return v == 0; });
  return x;
}

std::vector<std::int64_t> RootSystem::root_coords(const Weight& w) const {
  const std::size_t n = static_cast<std::size_t>(rank());
  if (w.rank() != n) throw std::invalid_argument("weight rank mismatch");
  std::vector<std::int64_t> c(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rat v(0);
    for (std::size_t j = 0; j < n; ++j)
      if (w[j] != 0) v += cartan_inv_[k][j] * Rat(w[j]);
    if (!is_integer(v)) throw std::invalid_argument("weight is not in the root lattice");
    c[k] = to_int64(numerator(v));
  }
  return c;
}

std::int64_t RootSystem::root_height(const Weight& w) const {
  auto c = root_coords(w);
  std::int64_t h = 0;
  for (auto v : c) h += v;
  return h;
}

std::int64_t RootSystem::chain_down(const OrthoVec& beta, const OrthoVec& alpha) const {
  std::int64_t k = 0;
  OrthoVec v = beta;
  while (true) {
    v = v - alpha;
    if (v.is_zero() || !is_root(v)) break;
    ++k;
  }
  return k;
}

const RootSystem& shared_root_system(const LieType& t) {
  static std::mutex mu;
  static std::map<LieType, std::unique_ptr<const RootSystem>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(t);
  if (it == cache.end())
    it = cache.emplace(t, std::make_unique<const RootSystem>(RootSystem::build(t))).first;
  return *it->second;
}

}  // namespace liefusion
