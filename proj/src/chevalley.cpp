#include "liefusion/chevalley.hpp"

#include "liefusion/explicit_module.hpp"
#include "liefusion/weight_system.hpp"

#include <stdexcept>

namespace liefusion {

OrthoVec ChevalleyBasis::root_vec(SignedRoot s) const {
  const Root& r = R->positive_root(root_index_of(s));
  return is_positive(s) ? r.vec : -r.vec;
}

Int ChevalleyBasis::structure_constant(SignedRoot a, SignedRoot b) const {
  auto it = constants.find({a, b});
  return it == constants.end() ? Int(0) : it->second;
}

ChevalleyBasis chevalley_basis(const RootSystem& R) {
  ChevalleyBasis cb;
  cb.R = &R;

  // Extract the constants from a faithful module: the smallest fundamental
  // representation keeps the matrices tiny.
  const std::size_t n = static_cast<std::size_t>(R.rank());
  std::size_t best = 0;
  Int best_dim = weyl_dim(R, Weight::fundamental(n, 0));
  for (std::size_t i = 1; i < n; ++i) {
    Int d = weyl_dim(R, Weight::fundamental(n, i));
    if (d < best_dim) {
      best_dim = d;
      best = i;
    }
  }
  ModuleOptions opts;
  opts.dim_cap = to_int64(best_dim);
  ExplicitModule M = ExplicitModule::build(R, Weight::fundamental(n, best), opts);

  const std::size_t np = static_cast<std::size_t>(R.num_positive_roots());
  auto op_of = [&](SignedRoot s) -> const SparseMat& {
    const Root& r = R.positive_root(root_index_of(s));
    return is_positive(s) ? M.raising(r) : M.lowering(r);
  };

  for (std::size_t ka = 0; ka < np; ++ka) {
    for (int sa : {+1, -1}) {
      SignedRoot a = signed_root(ka, sa > 0);
      for (std::size_t kb = 0; kb < np; ++kb) {
        for (int sb : {+1, -1}) {
          SignedRoot b = signed_root(kb, sb > 0);
          OrthoVec sum = cb.root_vec(a) + cb.root_vec(b);
          if (sum.is_zero()) continue;
          auto lk = R.root_lookup(sum);
          if (!lk) continue;
          SignedRoot c = signed_root(lk->first, lk->second > 0);
          SparseMat K = commutator(op_of(a), op_of(b));
          const SparseMat& Xc = op_of(c);
          Rat scalar(0);
          for (std::size_t j = 0; j < Xc.size() && scalar == 0; ++j)
            if (!Xc.col(j).empty()) {
              const auto& [row, val] = Xc.col(j).front();
              scalar = K.entry(row, j) / val;
            }
          if (scalar == 0 || !(K == Xc.scaled(scalar)))
            throw std::logic_error("commutator is not proportional to the expected root vector");
          cb.constants[{a, b}] = rat_to_int(scalar);
        }
      }
    }
  }

  // Coroot coordinates: for gamma = sum m_i alpha_i, the coroot is
  // gamma^vee = sum m_i (alpha_i|alpha_i)/(gamma|gamma) alpha_i^vee.
  for (std::size_t k = 0; k < np; ++k) {
    const Root& gamma = R.positive_root(k);
    std::vector<std::int64_t> coords(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rat c = Rat(gamma.simple_coords[i]) * R.simple_root(static_cast<int>(i)).norm2 / gamma.norm2;
      coords[i] = to_int64(rat_to_int(c));
    }
    cb.coroot_coords.push_back(std::move(coords));
  }
  return cb;
}

int elem_id_h(const RootSystem& R, int i) {
  (void)R;
  return i;
}

int elem_id_root(const RootSystem& R, SignedRoot s) {
  std::size_t k = root_index_of(s);
  return R.rank() + 2 * static_cast<int>(k) + (is_positive(s) ? 0 : 1);
}

namespace {

void add_scaled(AlgElem& out, int id, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = out.emplace(id, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) out.erase(it);
  }
}

// Bracket of two basis elements, appended to out with coefficient c.
void bracket_basis(const ChevalleyBasis& cb, int x, int y, const Rat& c, AlgElem& out) {
  const RootSystem& R = *cb.R;
  const int n = R.rank();
  const bool x_cartan = x < n, y_cartan = y < n;
  if (x_cartan && y_cartan) return;
  if (x_cartan || y_cartan) {
    // [H_i, X_s] = n_{s, alpha_i} X_s, with sign flipping for F-vectors.
    int h = x_cartan ? x : y;
    int other = x_cartan ? y : x;
    Rat sign = x_cartan ? c : -c;
    std::size_t k = static_cast<std::size_t>((other - n) / 2);
    bool pos = ((other - n) % 2) == 0;
    std::int64_t pairing = R.positive_root(k).dynkin[static_cast<std::size_t>(h)];
    add_scaled(out, other, sign * Rat(pos ? pairing : -pairing));
    return;
  }
  auto decode = [&](int id) {
    std::size_t k = static_cast<std::size_t>((id - n) / 2);
    bool pos = ((id - n) % 2) == 0;
    return signed_root(k, pos);
  };
  SignedRoot a = decode(x), b = decode(y);
  OrthoVec sum = cb.root_vec(a) + cb.root_vec(b);
  if (sum.is_zero()) {
    // [E_gamma, F_gamma] = H_gamma.
    std::size_t k = root_index_of(a);
    Rat sign = is_positive(a) ? c : -c;
    for (int i = 0; i < n; ++i)
      add_scaled(out, elem_id_h(R, i), sign * Rat(cb.coroot_coords[k][static_cast<std::size_t>(i)]));
    return;
  }
  auto lk = R.root_lookup(sum);
  if (!lk) return;
  SignedRoot s = signed_root(lk->first, lk->second > 0);
  add_scaled(out, elem_id_root(R, s), c * Rat(cb.structure_constant(a, b)));
}

}  // namespace

AlgElem bracket(const ChevalleyBasis& cb, const AlgElem& x, const AlgElem& y) {
  AlgElem out;
  for (const auto& [xi, xc] : x)
    for (const auto& [yi, yc] : y) bracket_basis(cb, xi, yi, xc * yc, out);
  return out;
}

}  // namespace liefusion
