#pragma once

#include "liefusion/root_system.hpp"

#include <map>

namespace liefusion {

// Signed root index: +(k+1) for the k-th positive root, -(k+1) for its
// negative.
using SignedRoot = int;

inline SignedRoot signed_root(std::size_t k, bool positive) {
  return positive ? static_cast<int>(k) + 1 : -(static_cast<int>(k) + 1);
}
inline std::size_t root_index_of(SignedRoot s) { return static_cast<std::size_t>(s > 0 ? s - 1 : -s - 1); }
inline bool is_positive(SignedRoot s) { return s > 0; }

// Chevalley basis data: integer structure constants N_{alpha,beta} for all
// ordered root pairs whose sum is again a root, and coroot coordinates
// H_gamma = sum_i c_i H_{alpha_i}.
struct ChevalleyBasis {
  const RootSystem* R = nullptr;
  std::map<std::pair<SignedRoot, SignedRoot>, Int> constants;
  std::vector<std::vector<std::int64_t>> coroot_coords;  // per positive root

  OrthoVec root_vec(SignedRoot s) const;
  // N_{alpha,beta}; zero when alpha+beta is not a root.
  Int structure_constant(SignedRoot a, SignedRoot b) const;
};

ChevalleyBasis chevalley_basis(const RootSystem& R);

// Abstract Lie algebra elements over the basis {H_i} u {E_gamma, F_gamma}:
// id i in [0, rank) is H_i, id rank + 2k is E_k, id rank + 2k + 1 is F_k.
using AlgElem = std::map<int, Rat>;

int elem_id_h(const RootSystem& R, int i);
int elem_id_root(const RootSystem& R, SignedRoot s);

AlgElem bracket(const ChevalleyBasis& cb, const AlgElem& x, const AlgElem& y);

}  // namespace liefusion
