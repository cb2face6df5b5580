#include "liefusion/weight.hpp"

#include <algorithm>
#include <stdexcept>

namespace liefusion {

namespace {

void check_same_rank(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

Weight Weight::fundamental(std::size_t rank, std::size_t i) {
  Weight w = zero(rank);
  w.labels.at(i) = 1;
  return w;
}

bool Weight::is_zero() const {
  return std::all_of(labels.begin(), labels.end(), [](std::int64_t v) { return v == 0; });
}

bool Weight::is_dominant() const {
  return std::all_of(labels.begin(), labels.end(), [](std::int64_t v) { return v >= 0; });
}

Weight operator+(const Weight& a, const Weight& b) {
  check_same_rank(a.rank(), b.rank());
  Weight r = a;
  for (std::size_t i = 0; i < r.rank(); ++i) r.labels[i] += b.labels[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  check_same_rank(a.rank(), b.rank());
  Weight r = a;
  for (std::size_t i = 0; i < r.rank(); ++i) r.labels[i] -= b.labels[i];
  return r;
}

Weight operator-(const Weight& a) {
  Weight r = a;
  for (auto& v : r.labels) v = -v;
  return r;
}

Weight operator*(std::int64_t c, const Weight& a) {
  Weight r = a;
  for (auto& v : r.labels) v *= c;
  return r;
}

bool OrthoVec::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rat& v) { return v == 0; });
}

bool OrthoVec::operator<(const OrthoVec& o) const {
  return std::lexicographical_compare(coords.begin(), coords.end(), o.coords.begin(), o.coords.end());
}

OrthoVec operator+(const OrthoVec& a, const OrthoVec& b) {
  check_same_rank(a.dim(), b.dim());
  OrthoVec r = a;
  for (std::size_t i = 0; i < r.dim(); ++i) r.coords[i] += b.coords[i];
  return r;
}

OrthoVec operator-(const OrthoVec& a, const OrthoVec& b) {
  check_same_rank(a.dim(), b.dim());
  OrthoVec r = a;
  for (std::size_t i = 0; i < r.dim(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

OrthoVec operator-(const OrthoVec& a) {
  OrthoVec r = a;
  for (auto& v : r.coords) v = -v;
  return r;
}

OrthoVec operator*(const Rat& c, const OrthoVec& a) {
  OrthoVec r = a;
  for (auto& v : r.coords) v *= c;
  return r;
}

Rat dot(const OrthoVec& a, const OrthoVec& b) {
  check_same_rank(a.dim(), b.dim());
  Rat s(0);
  for (std::size_t i = 0; i < a.dim(); ++i) s += a.coords[i] * b.coords[i];
  return s;
}

}  // namespace liefusion
