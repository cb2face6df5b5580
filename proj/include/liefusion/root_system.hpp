#pragma once

#include "liefusion/weight.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace liefusion {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct LieType {
  Family family = Family::A;
  int rank = 1;

  // Parses names like "F4", "A1", "E8"; throws on invalid family/rank.
  static LieType parse(const std::string& name);
  std::string name() const;
  void validate() const;

  bool operator==(const LieType&) const = default;
  auto operator<=>(const LieType&) const = default;
};

struct Root {
  OrthoVec vec;
  Weight dynkin;                            // labels n_{root, alpha_i}
  std::vector<std::int64_t> simple_coords;  // root = sum c_i * alpha_i
  std::int64_t height = 0;                  // sum of simple coordinates
  Rat norm2;                                // (root|root) in the normalized form
};

// An immutable realized root system with the normalization (theta|theta) = 2.
// All operations are pure and safe for concurrent use.
class RootSystem {
 public:
  static RootSystem build(const LieType& t);

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::int64_t dimension() const { return dimension_; }
  std::int64_t dual_coxeter() const { return dual_coxeter_; }
  std::int64_t num_positive_roots() const { return static_cast<std::int64_t>(positive_roots_.size()); }

  // Positive roots in canonical order: by height, then decreasing
  // lexicographic on simple-root coordinates. Simple root i sits at index i.
  std::span<const Root> positive_roots() const { return positive_roots_; }
  const Root& positive_root(std::size_t k) const { return positive_roots_[k]; }
  const Root& simple_root(int i) const { return positive_roots_[static_cast<std::size_t>(i)]; }
  const Root& theta() const { return positive_roots_.back(); }

  const OrthoVec& fundamental_weight(int i) const { return fundamental_weights_[static_cast<std::size_t>(i)]; }
  const OrthoVec& weyl_vector_ortho() const { return weyl_vector_; }
  Weight weyl_vector() const { return Weight(std::vector<std::int64_t>(static_cast<std::size_t>(rank()), 1)); }

  // cartan()[i][j] = n_{alpha_j, alpha_i}
  const std::vector<std::vector<std::int64_t>>& cartan() const { return cartan_; }
  // form_matrix()[i][j] = (lambda_i | lambda_j)
  const std::vector<std::vector<Rat>>& form_matrix() const { return form_matrix_; }

  // Invariant bilinear form, normalized so (theta|theta) = 2.
  Rat inner(const OrthoVec& x, const OrthoVec& y) const;
  Rat inner(const Weight& x, const Weight& y) const;
  Rat inner(const Weight& x, const OrthoVec& y) const;

  // n_{x,alpha} = 2 (x|alpha) / (alpha|alpha); alpha must be a root.
  Rat pairing(const OrthoVec& x, const Root& alpha) const;
  std::int64_t pairing(const Weight& x, const Root& alpha) const;

  // Reflection across the hyperplane orthogonal to alpha.
  OrthoVec reflect(const Root& alpha, const OrthoVec& x) const;
  Weight reflect(const Root& alpha, const Weight& x) const;
  Weight simple_reflect(int i, const Weight& x) const;

  OrthoVec to_orthogonal(const Weight& w) const;
  // Inverse of to_orthogonal on the weight lattice; throws if v is not an
  // integral weight (or lies outside the realized lattice).
  Weight from_orthogonal(const OrthoVec& v) const;

  // (w|theta); always an integer for integral weights.
  std::int64_t level(const Weight& w) const;
  bool is_admissible(const Weight& w, std::int64_t l) const { return w.is_dominant() && level(w) <= l; }

  // Looks up v among the roots; returns {index into positive_roots, sign}.
  std::optional<std::pair<std::size_t, int>> root_lookup(const OrthoVec& v) const;
  bool is_root(const OrthoVec& v) const { return root_lookup(v).has_value(); }
  std::optional<std::size_t> positive_root_index(const Weight& dynkin_labels) const;

  // Unique dominant Weyl-orbit representative. Optionally reports the sign
  // (-1)^{#reflections used} and whether the orbit lies on a reflection wall.
  Weight dominant_rep(const Weight& w, int* det = nullptr, bool* on_wall = nullptr) const;

  // Coordinates of w in the simple-root basis; throws if w is not in the
  // root lattice. root_height is the coordinate sum.
  std::vector<std::int64_t> root_coords(const Weight& w) const;
  std::int64_t root_height(const Weight& w) const;

  // Largest k >= 0 with beta - k*alpha still a root (the downward alpha
  // string through the root beta).
  std::int64_t chain_down(const OrthoVec& beta, const OrthoVec& alpha) const;

 private:
  RootSystem() = default;

  LieType type_;
  std::size_t ambient_dim_ = 0;
  Rat form_scale_;  // inner = form_scale * dot
  std::vector<Root> positive_roots_;
  std::map<Weight, std::size_t> root_by_dynkin_;
  std::vector<std::vector<std::int64_t>> cartan_;
  std::vector<std::vector<Rat>> cartan_inv_;  // rational inverse of cartan_
  std::vector<std::vector<Rat>> form_matrix_;
  std::vector<OrthoVec> fundamental_weights_;
  OrthoVec weyl_vector_;
  std::vector<std::int64_t> comarks_;  // (lambda_i | theta)
  std::int64_t dual_coxeter_ = 0;
  std::int64_t dimension_ = 0;
};

// Process-wide shared instances (built once per type, immutable).
const RootSystem& shared_root_system(const LieType& t);
inline const RootSystem& f4() { return shared_root_system(LieType{Family::F, 4}); }

}  // namespace liefusion
