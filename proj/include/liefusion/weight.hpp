#pragma once

#include "liefusion/exact.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace liefusion {

// A weight in the Dynkin basis: labels[i] is the pairing with the i-th
// simple root, so the fundamental weight of index i is the unit vector e_i.
struct Weight {
  std::vector<std::int64_t> labels;

  Weight() = default;
  explicit Weight(std::vector<std::int64_t> l) : labels(std::move(l)) {}
  static Weight zero(std::size_t rank) { return Weight(std::vector<std::int64_t>(rank, 0)); }
  static Weight fundamental(std::size_t rank, std::size_t i);

  std::size_t rank() const { return labels.size(); }
  std::int64_t operator[](std::size_t i) const { return labels[i]; }
  std::int64_t& operator[](std::size_t i) { return labels[i]; }

  bool is_zero() const;
  bool is_dominant() const;  // all labels >= 0

  auto operator<=>(const Weight&) const = default;
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
Weight operator*(std::int64_t c, const Weight& a);

// A vector in the ambient orthogonal (Euclidean) basis of a root-system
// realization. Coordinates are exact rationals.
struct OrthoVec {
  std::vector<Rat> coords;

  OrthoVec() = default;
  explicit OrthoVec(std::vector<Rat> c) : coords(std::move(c)) {}
  static OrthoVec zero(std::size_t dim) { return OrthoVec(std::vector<Rat>(dim, Rat(0))); }

  std::size_t dim() const { return coords.size(); }
  bool is_zero() const;

  bool operator==(const OrthoVec& o) const { return coords == o.coords; }
  bool operator<(const OrthoVec& o) const;  // lexicographic
};

OrthoVec operator+(const OrthoVec& a, const OrthoVec& b);
OrthoVec operator-(const OrthoVec& a, const OrthoVec& b);
OrthoVec operator-(const OrthoVec& a);
OrthoVec operator*(const Rat& c, const OrthoVec& a);

// Plain Euclidean dot product (no normalization scale applied).
Rat dot(const OrthoVec& a, const OrthoVec& b);

}  // namespace liefusion
