#include "liefusion/explicit_module.hpp"

#include "liefusion/weight_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace liefusion {

namespace {

using Expansion = std::vector<std::pair<int, Rat>>;  // (global index, coeff)

Expansion to_expansion(const std::map<int, Rat>& m) {
  Expansion e;
  for (const auto& [k, v] : m)
    if (v != 0) e.emplace_back(k, v);
  return e;
}

}  // namespace

ExplicitModule ExplicitModule::build(const RootSystem& R, const Weight& lambda, const ModuleOptions& opts) {
  if (!lambda.is_dominant()) throw std::invalid_argument("module construction requires a dominant weight");
  const std::size_t n = static_cast<std::size_t>(R.rank());

  ExplicitModule M;
  M.R_ = &R;
  M.highest_ = lambda;

  // Columns of the simple raising/lowering operators, keyed by global index.
  std::vector<std::vector<Expansion>> e_cols(n), f_cols(n);
  auto ensure_cols = [&](std::size_t size) {
    for (std::size_t i = 0; i < n; ++i) {
      e_cols[i].resize(size);
      f_cols[i].resize(size);
    }
  };

  M.basis_weights_.push_back(lambda);
  M.gram_.push_back(Rat(1));
  M.spaces_[lambda] = {0};
  ensure_cols(1);

  std::vector<Weight> frontier{lambda};  // nonempty spaces at the current depth
  while (!frontier.empty()) {
    std::set<Weight> next_weights;
    for (const Weight& w : frontier)
      for (std::size_t i = 0; i < n; ++i) next_weights.insert(w - R.simple_root(static_cast<int>(i)).dynkin);

    std::vector<Weight> created;
    for (const Weight& nu : next_weights) {
      // Candidates F_i u over all parents, in deterministic order.
      struct Candidate {
        std::size_t i;
        int u;
      };
      std::vector<Candidate> cands;
      for (std::size_t i = 0; i < n; ++i) {
        Weight parent = nu + R.simple_root(static_cast<int>(i)).dynkin;
        auto it = M.spaces_.find(parent);
        if (it == M.spaces_.end()) continue;
        for (int u : it->second) cands.push_back({i, u});
      }
      if (cands.empty()) continue;
      const std::size_t nc = cands.size();

      // y[b][i] = E_i (F_{j_b} w_b), a vector in the space nu + alpha_i.
      std::vector<std::vector<std::map<int, Rat>>> y(nc, std::vector<std::map<int, Rat>>(n));
      for (std::size_t b = 0; b < nc; ++b) {
        const auto [jb, wb] = cands[b];
        const Weight wb_weight = M.basis_weights_[static_cast<std::size_t>(wb)];
        for (std::size_t i = 0; i < n; ++i) {
          std::map<int, Rat>& acc = y[b][i];
          for (const auto& [t, cv] : e_cols[i][static_cast<std::size_t>(wb)])
            for (const auto& [s, c2] : f_cols[jb][static_cast<std::size_t>(t)]) {
              Rat add = cv * c2;
              if (add != 0) acc[s] += add;
            }
          if (i == jb) {
            Rat h = Rat(wb_weight[i]);
            if (h != 0) acc[wb] += h;
          }
          std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
        }
      }

      // Candidate Gram matrix: <F_i u | F_j w> = <u | E_i F_j w>.
      RatMatrix G(nc, RatVec(nc, Rat(0)));
      for (std::size_t a = 0; a < nc; ++a) {
        const auto [ia, ua] = cands[a];
        for (std::size_t b = a; b < nc; ++b) {
          auto it = y[b][ia].find(ua);
          Rat v = it == y[b][ia].end() ? Rat(0) : it->second * M.gram_[static_cast<std::size_t>(ua)];
          G[a][b] = v;
          G[b][a] = v;
        }
      }

      // Exact Gram-Schmidt over the candidates; accepted residuals become
      // the (orthogonal) basis of the new weight space.
      std::vector<std::size_t> accepted;            // candidate indices
      std::vector<int> accepted_global;             // their global basis ids
      std::vector<Rat> res_norm;                    // <b_s|b_s>
      std::vector<RatVec> beta;                     // b_s over candidates
      std::vector<Expansion> cand_expansion(nc);    // candidate in new basis
      for (std::size_t t = 0; t < nc; ++t) {
        std::vector<Rat> proj(accepted.size(), Rat(0));
        Rat residual = G[t][t];
        for (std::size_t s = 0; s < accepted.size(); ++s) {
          Rat ip(0);
          for (std::size_t k = 0; k <= accepted[s]; ++k)
            if (beta[s][k] != 0) ip += beta[s][k] * G[t][k];
          proj[s] = ip / res_norm[s];
          residual -= proj[s] * proj[s] * res_norm[s];
        }
        Expansion exp;
        for (std::size_t s = 0; s < accepted.size(); ++s)
          if (proj[s] != 0) exp.emplace_back(accepted_global[s], proj[s]);
        if (residual == 0) {
          cand_expansion[t] = std::move(exp);
          continue;
        }
        if (residual < 0) throw std::logic_error("Shapovalov form is not positive semidefinite");
        // Accept as a new basis vector.
        int g = static_cast<int>(M.basis_weights_.size());
        if (static_cast<std::int64_t>(M.basis_weights_.size()) + 1 > opts.dim_cap)
          throw std::invalid_argument("module dimension cap (" + std::to_string(opts.dim_cap) + ") exceeded");
        M.basis_weights_.push_back(nu);
        M.gram_.push_back(residual);
        RatVec brow(nc, Rat(0));
        brow[t] = 1;
        for (std::size_t s = 0; s < accepted.size(); ++s)
          if (proj[s] != 0)
            for (std::size_t k = 0; k <= accepted[s]; ++k) brow[k] -= proj[s] * beta[s][k];
        beta.push_back(std::move(brow));
        res_norm.push_back(residual);
        accepted.push_back(t);
        accepted_global.push_back(g);
        exp.emplace_back(g, Rat(1));
        cand_expansion[t] = std::move(exp);
      }
      if (accepted.empty()) continue;

      auto& space = M.spaces_[nu];
      space = accepted_global;
      ensure_cols(M.basis_weights_.size());

      // Record lowering columns: F_{j} w = candidate expansion.
      for (std::size_t t = 0; t < nc; ++t)
        f_cols[cands[t].i][static_cast<std::size_t>(cands[t].u)] = cand_expansion[t];

      // Raising action on the new basis vectors.
      for (std::size_t s = 0; s < accepted.size(); ++s) {
        for (std::size_t i = 0; i < n; ++i) {
          std::map<int, Rat> acc;
          for (std::size_t k = 0; k <= accepted[s]; ++k) {
            if (beta[s][k] == 0) continue;
            for (const auto& [row, v] : y[k][i]) {
              Rat add = beta[s][k] * v;
              if (add != 0) acc[row] += add;
            }
          }
          std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
          e_cols[i][static_cast<std::size_t>(accepted_global[s])] = to_expansion(acc);
        }
      }
      created.push_back(nu);
    }
    frontier = std::move(created);
  }

  const std::size_t dim = M.basis_weights_.size();
  for (std::size_t i = 0; i < n; ++i) {
    SparseMat e(dim), f(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      e.set_col(j, e_cols[i][j]);
      f.set_col(j, f_cols[i][j]);
    }
    M.E_.push_back(std::move(e));
    M.F_.push_back(std::move(f));
  }
  return M;
}

const std::vector<int>& ExplicitModule::space(const Weight& w) const {
  static const std::vector<int> empty;
  auto it = spaces_.find(w);
  return it == spaces_.end() ? empty : it->second;
}

const SparseMat& ExplicitModule::root_op(std::size_t root_index, bool raising_op) const {
  if (R_->positive_root(root_index).height == 1) {
    // Simple roots occupy the first rank() slots of the canonical order.
    return raising_op ? E_[root_index] : F_[root_index];
  }
  std::scoped_lock lock(*op_mutex_);
  return root_op_locked(root_index, raising_op);
}

// Caller holds op_mutex_. Recursion depth is bounded by the root height.
const SparseMat& ExplicitModule::root_op_locked(std::size_t root_index, bool raising_op) const {
  const Root& gamma = R_->positive_root(root_index);
  if (gamma.height == 1) return raising_op ? E_[root_index] : F_[root_index];
  auto& cache = raising_op ? raise_cache_ : lower_cache_;
  auto it = cache.find(root_index);
  if (it != cache.end()) return it->second;

  // First positive root a (canonical order) with gamma - a again positive.
  std::size_t a_idx = 0, b_idx = 0;
  bool found = false;
  for (std::size_t a = 0; a < static_cast<std::size_t>(R_->num_positive_roots()) && !found; ++a) {
    auto lk = R_->root_lookup(gamma.vec - R_->positive_root(a).vec);
    if (lk && lk->second > 0) {
      a_idx = a;
      b_idx = lk->first;
      found = true;
    }
  }
  if (!found) throw std::logic_error("positive root admits no decomposition");
  std::int64_t p = R_->chain_down(R_->positive_root(b_idx).vec, R_->positive_root(a_idx).vec);
  Rat inv(1, p + 1);

  const SparseMat& xa = root_op_locked(a_idx, raising_op);
  const SparseMat& xb = root_op_locked(b_idx, raising_op);
  // E_gamma = [E_a, E_b]/(p+1);  F_gamma = [F_b, F_a]/(p+1) keeps the
  // adjointness E_gamma^* = F_gamma under the Shapovalov form.
  SparseMat op = raising_op ? commutator(xa, xb).scaled(inv) : commutator(xb, xa).scaled(inv);
  if (op.is_zero()) throw std::logic_error("root vector collapsed to zero");
  return cache.emplace(root_index, std::move(op)).first->second;
}

const SparseMat& ExplicitModule::raising(const Root& alpha) const {
  auto lk = R_->root_lookup(alpha.vec);
  if (!lk || lk->second < 0) throw std::invalid_argument("raising requires a positive root");
  return root_op(lk->first, true);
}

const SparseMat& ExplicitModule::lowering(const Root& alpha) const {
  auto lk = R_->root_lookup(alpha.vec);
  if (!lk || lk->second < 0) throw std::invalid_argument("lowering requires a positive root");
  return root_op(lk->first, false);
}

ExplicitModule ExplicitModule::from_parts(const RootSystem& R, Weight highest, std::vector<Weight> basis_weights,
                                          std::vector<Rat> gram, std::vector<SparseMat> raising,
                                          std::vector<SparseMat> lowering) {
  ExplicitModule M;
  M.R_ = &R;
  M.highest_ = std::move(highest);
  M.basis_weights_ = std::move(basis_weights);
  M.gram_ = std::move(gram);
  M.E_ = std::move(raising);
  M.F_ = std::move(lowering);
  for (std::size_t k = 0; k < M.basis_weights_.size(); ++k)
    M.spaces_[M.basis_weights_[k]].push_back(static_cast<int>(k));
  return M;
}

RatVec ExplicitModule::basis_vector(int k) const {
  RatVec v(static_cast<std::size_t>(dim()), Rat(0));
  v[static_cast<std::size_t>(k)] = 1;
  return v;
}

Rat ExplicitModule::form(const RatVec& x, const RatVec& y) const {
  Rat s(0);
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] != 0 && y[k] != 0) s += x[k] * y[k] * gram_[k];
  return s;
}

RatVec ExplicitModule::restrict_to(const Weight& w, const RatVec& x) const {
  const auto& idx = space(w);
  RatVec r(idx.size(), Rat(0));
  std::vector<bool> in_space(x.size(), false);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    r[k] = x[static_cast<std::size_t>(idx[k])];
    in_space[static_cast<std::size_t>(idx[k])] = true;
  }
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] != 0 && !in_space[k]) throw std::invalid_argument("vector is not supported on the weight space");
  return r;
}

Subspace kspace(const ExplicitModule& M, const Weight& mu, const Weight& nu) {
  const RootSystem& R = M.root_system();
  const Weight target = nu - mu;
  Subspace S;
  S.weight = target;
  for (int i = 0; i < R.rank(); ++i) {
    const Weight alpha = R.simple_root(i).dynkin;
    std::int64_t power = mu[static_cast<std::size_t>(i)] + 1;
    Weight source = target + power * alpha;
    for (int u : M.space(source)) {
      RatVec v = M.basis_vector(u);
      for (std::int64_t k = 0; k < power; ++k) v = M.lowering(i).apply(v);
      S.spanning.push_back(M.restrict_to(target, v));
    }
  }
  S.rank = S.spanning.empty() ? 0 : rank_of_rows(S.spanning);
  return S;
}

Int fusion_via_eq2(const ExplicitModule& M, const Weight& mu, const Weight& nu) {
  Subspace K = kspace(M, mu, nu);
  std::size_t space_dim = M.space(nu - mu).size();
  if (K.rank > space_dim) throw std::logic_error("K-space rank exceeds the weight-space dimension");
  return Int(space_dim - K.rank);
}

namespace {

void require_f4_charge(const ExplicitModule& M) {
  if (M.root_system().type() != LieType{Family::F, 4} || !(M.highest_weight() == Weight({0, 0, 0, 1})))
    throw std::invalid_argument("this report requires the 26-dimensional F4 module");
}

const Root& root_at(const RootSystem& R, const OrthoVec& v) {
  auto lk = R.root_lookup(v);
  if (!lk || lk->second < 0) throw std::invalid_argument("expected a positive root");
  return R.positive_root(lk->first);
}

OrthoVec make_vec(std::vector<Rat> c) { return OrthoVec(std::move(c)); }

}  // namespace

ZeroWeightReport zero_weight_report(const ExplicitModule& M) {
  require_f4_charge(M);
  const RootSystem& R = M.root_system();
  const Weight zero = Weight::zero(4);

  // alpha = [1,0,0,-1], beta = (1/2)[1,1,1,1]; v_{rho3} = F_alpha v and
  // v_{rho4} = F_beta v for the unit highest vector v.
  const Root& alpha = root_at(R, make_vec({Rat(1), Rat(0), Rat(0), Rat(-1)}));
  const Root& beta = root_at(R, make_vec({Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)}));
  RatVec v = M.basis_vector(0);
  RatVec v_rho3 = M.lowering(alpha).apply(v);
  RatVec v_rho4 = M.lowering(beta).apply(v);

  // rho5 = (1/2)[-1,1,1,-1]; its negative is a positive (group A) root, so
  // the lowering operator along rho5 is the raising operator of -rho5.
  OrthoVec rho5 = make_vec({Rat(-1, 2), Rat(1, 2), Rat(1, 2), Rat(-1, 2)});
  const Root& neg_rho5 = root_at(R, -rho5);
  const auto& rho5_space = M.space(R.from_orthogonal(rho5));
  if (rho5_space.size() != 1) throw std::logic_error("expected a one-dimensional rho5 weight space");
  RatVec v_rho5 = M.basis_vector(rho5_space[0]);

  RatVec x1 = M.lowering(2).apply(v_rho3);            // F_{rho3} v_{rho3}
  RatVec x2 = M.lowering(3).apply(v_rho4);            // F_{rho4} v_{rho4}
  RatVec x3 = M.raising(neg_rho5).apply(v_rho5);      // F_{rho5} v_{rho5}

  ZeroWeightReport rep;
  rep.f3_v3 = M.restrict_to(zero, x1);
  rep.f4_v4 = M.restrict_to(zero, x2);
  rep.f5_v5 = M.restrict_to(zero, x3);
  auto all_zero = [](const RatVec& r) {
    return std::all_of(r.begin(), r.end(), [](const Rat& v) { return v == 0; });
  };
  if (all_zero(rep.f3_v3) || all_zero(rep.f4_v4) || all_zero(rep.f5_v5))
    throw std::logic_error("a distinguished zero-weight vector vanished");

  rep.norm_f3v3 = M.form(x1, x1);
  rep.norm_f4v4 = M.form(x2, x2);
  rep.norm_f5v5 = M.form(x3, x3);
  rep.pair_34 = M.form(x1, x2);
  rep.pair_35 = M.form(x1, x3);
  rep.gram_det_34 = rep.norm_f3v3 * rep.norm_f4v4 - rep.pair_34 * rep.pair_34;
  rep.gram_det_35 = rep.norm_f3v3 * rep.norm_f5v5 - rep.pair_35 * rep.pair_35;
  rep.cos2_35 = rep.pair_35 * rep.pair_35 / (rep.norm_f3v3 * rep.norm_f5v5);
  return rep;
}

PairingReport appendix_b_report(const ExplicitModule& M) {
  ZeroWeightReport rep = zero_weight_report(M);
  PairingReport out;
  out.norm1 = rep.norm_f3v3;
  out.norm2 = rep.norm_f4v4;
  out.cross_abs = rep.pair_34 < 0 ? -rep.pair_34 : rep.pair_34;
  return out;
}

bool check_condition_iii(const ExplicitModule& M, const Weight& mu0, const Weight& nu0, const Root& alpha,
                         const Weight& eta) {
  const RootSystem& R = M.root_system();
  auto lk = R.root_lookup(alpha.vec);
  if (!lk || lk->second < 0) throw std::invalid_argument("condition (iii) requires a positive root");

  Subspace K = kspace(M, mu0, nu0);
  const Weight target = nu0 - mu0;
  const Weight raised = eta + alpha.dynkin;
  for (int u : M.space(eta)) {
    RatVec w = M.raising(alpha).apply(M.basis_vector(u));
    bool nonzero = std::any_of(w.begin(), w.end(), [](const Rat& v) { return v != 0; });
    if (!nonzero) continue;
    if (!(raised == target)) return true;  // nonzero vector in a different space is outside K
    RatVec wr = M.restrict_to(target, w);
    if (!in_row_span(K.spanning, wr)) return true;
  }
  return false;
}

const ExplicitModule& f4_charge_module() {
  static const ExplicitModule M = ExplicitModule::build(f4(), Weight({0, 0, 0, 1}));
  return M;
}

}  // namespace liefusion
