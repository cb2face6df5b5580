#include "liefusion/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace liefusion {

RatMatrix identity_matrix(std::size_t n) {
  RatMatrix m(n, RatVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
  if (a.empty() || b.empty()) return {};
  std::size_t n = a.size(), k = b.size(), m = b[0].size();
  RatMatrix r(n, RatVec(m, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

RatMatrix inverse(const RatMatrix& a) {
  std::size_t n = a.size();
  RatMatrix work = a;
  RatMatrix inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::invalid_argument("singular matrix");
    std::swap(work[pivot], work[col]);
    std::swap(inv[pivot], inv[col]);
    Rat p = work[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      work[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || work[i][col] == 0) continue;
      Rat f = work[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        work[i][j] -= f * work[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Rat determinant(RatMatrix a) {
  std::size_t n = a.size();
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    Rat p = a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      Rat f = a[i][col] / p;
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

std::size_t rank_of_rows(RatMatrix rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    Rat p = rows[rank][col];
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      Rat f = rows[i][col] / p;
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

bool in_row_span(const RatMatrix& basis, const RatVec& v) {
  RatMatrix rows = basis;
  std::size_t base_rank = rank_of_rows(rows);
  rows.push_back(v);
  return rank_of_rows(rows) == base_rank;
}

void SparseMat::set_col(std::size_t j, std::vector<std::pair<int, Rat>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<int, Rat>> merged;
  for (auto& e : entries) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(e);
  }
  std::erase_if(merged, [](const auto& e) { return e.second == 0; });
  cols_[j] = std::move(merged);
}

void SparseMat::add_entry(std::size_t j, int row, const Rat& v) {
  if (v == 0) return;
  auto entries = cols_[j];
  entries.emplace_back(row, v);
  set_col(j, std::move(entries));
}

Rat SparseMat::entry(int row, std::size_t col) const {
  for (const auto& [r, v] : cols_[col])
    if (r == row) return v;
  return Rat(0);
}

bool SparseMat::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const auto& c) { return c.empty(); });
}

RatVec SparseMat::apply(const RatVec& x) const {
  RatVec y(n_, Rat(0));
  for (std::size_t j = 0; j < n_; ++j) {
    if (x[j] == 0) continue;
    for (const auto& [row, val] : cols_[j]) y[static_cast<std::size_t>(row)] += val * x[j];
  }
  return y;
}

SparseMat SparseMat::scaled(const Rat& c) const {
  SparseMat r(n_);
  if (c == 0) return r;
  for (std::size_t j = 0; j < n_; ++j) {
    auto entries = cols_[j];
    for (auto& e : entries) e.second *= c;
    r.cols_[j] = std::move(entries);
  }
  return r;
}

SparseMat SparseMat::transpose() const {
  SparseMat r(n_);
  for (std::size_t j = 0; j < n_; ++j)
    for (const auto& [row, val] : cols_[j]) r.cols_[static_cast<std::size_t>(row)].emplace_back(static_cast<int>(j), val);
  for (auto& c : r.cols_)
    std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return r;
}

SparseMat matmul(const SparseMat& a, const SparseMat& b) {
  SparseMat r(a.n_);
  for (std::size_t j = 0; j < b.n_; ++j) {
    std::vector<std::pair<int, Rat>> acc;
    for (const auto& [k, bv] : b.cols_[j])
      for (const auto& [i, av] : a.cols_[static_cast<std::size_t>(k)]) acc.emplace_back(i, av * bv);
    r.set_col(j, std::move(acc));
  }
  return r;
}

SparseMat operator+(const SparseMat& a, const SparseMat& b) {
  SparseMat r(a.n_);
  for (std::size_t j = 0; j < a.n_; ++j) {
    auto acc = a.cols_[j];
    acc.insert(acc.end(), b.cols_[j].begin(), b.cols_[j].end());
    r.set_col(j, std::move(acc));
  }
  return r;
}

SparseMat operator-(const SparseMat& a, const SparseMat& b) { return a + b.scaled(Rat(-1)); }

SparseMat commutator(const SparseMat& a, const SparseMat& b) { return matmul(a, b) - matmul(b, a); }

bool SparseMat::operator==(const SparseMat& o) const { return n_ == o.n_ && cols_ == o.cols_; }

}  // namespace liefusion
