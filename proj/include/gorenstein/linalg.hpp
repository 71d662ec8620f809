#pragma once

// Exact linear algebra over a field: sparse vectors, incremental echelon
// subspaces, kernels and intersections. No tolerances anywhere.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gorenstein/field.hpp"

namespace gorenstein {

template <FieldScalar K>
using SparseVec = std::vector<std::pair<int, K>>;  // sorted by index, no zeros

template <FieldScalar K>
using DenseVec = std::vector<K>;

template <FieldScalar K>
SparseVec<K> to_sparse(const DenseVec<K>& v) {
  SparseVec<K> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(static_cast<int>(i), v[i]);
  return out;
}

template <FieldScalar K>
DenseVec<K> to_dense(const SparseVec<K>& v, std::size_t n) {
  DenseVec<K> out(n);
  for (const auto& [i, a] : v) out[static_cast<std::size_t>(i)] = a;
  return out;
}

/// a + c*b
template <FieldScalar K>
SparseVec<K> axpy(const SparseVec<K>& a, const K& c, const SparseVec<K>& b) {
  SparseVec<K> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      K v = c * b[j].second;
      if (!v.is_zero()) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      K v = a[i].second + c * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <FieldScalar K>
SparseVec<K> scaled(const SparseVec<K>& a, const K& c) {
  SparseVec<K> out;
  if (c.is_zero()) return out;
  out.reserve(a.size());
  for (const auto& [i, v] : a) out.emplace_back(i, v * c);
  return out;
}

template <FieldScalar K>
bool is_zero(const DenseVec<K>& v) {
  return std::all_of(v.begin(), v.end(), [](const K& a) { return a.is_zero(); });
}

/// A subspace of K^n kept as rows in semi-echelon form: every row has a
/// distinct leading index and leading coefficient 1.
/// a + c b
template <FieldScalar K>
DenseVec<K> combine(const DenseVec<K>& a, const K& c, const DenseVec<K>& b) {
  DenseVec<K> out = a;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!b[i].is_zero()) out[i] += c * b[i];
  return out;
}

template <FieldScalar K>
DenseVec<K> scaled(const DenseVec<K>& a, const K& c) {
  DenseVec<K> out = a;
  for (auto& x : out) x = x * c;
  return out;
}

template <FieldScalar K>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : n_(ambient) {}

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<SparseVec<K>>& rows() const { return rows_; }

  SparseVec<K> reduce(SparseVec<K> v) const {
    SparseVec<K> out;
    std::size_t p = 0;
    while (p < v.size()) {
      auto it = pivot_.find(v[p].first);
      if (it == pivot_.end()) {
        out.push_back(v[p]);
        ++p;
        continue;
      }
      SparseVec<K> tail(v.begin() + static_cast<std::ptrdiff_t>(p), v.end());
      K c = -tail.front().second;
      v = axpy(tail, c, rows_[it->second]);
      p = 0;
    }
    return out;
  }
  DenseVec<K> reduce(const DenseVec<K>& v) const { return to_dense(reduce(to_sparse(v)), n_); }

  /// Returns true when v was independent of the current rows.
  bool insert(const SparseVec<K>& v) {
    auto r = reduce(v);
    if (r.empty()) return false;
    K inv = r.front().second.inverse();
    for (auto& e : r) e.second = e.second * inv;
    pivot_.emplace(r.front().first, rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }
  bool insert(const DenseVec<K>& v) { return insert(to_sparse(v)); }

  bool contains(const SparseVec<K>& v) const { return reduce(v).empty(); }
  bool contains(const DenseVec<K>& v) const { return contains(to_sparse(v)); }

  bool contains(const Subspace& other) const {
    return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const auto& r) { return contains(r); });
  }
  bool operator==(const Subspace& other) const {
    return n_ == other.n_ && dim() == other.dim() && contains(other);
  }

  std::vector<int> pivots() const {
    std::vector<int> p;
    for (const auto& r : rows_) p.push_back(r.front().first);
    return p;
  }

  /// Canonical basis: fully reduced echelon form sorted by pivot.
  std::vector<SparseVec<K>> reduced_basis() const {
    std::vector<SparseVec<K>> rows = rows_;
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.front().first < b.front().first; });
    for (std::size_t i = rows.size(); i-- > 0;) {
      for (std::size_t j = 0; j < i; ++j) {
        auto it = std::lower_bound(rows[j].begin(), rows[j].end(), rows[i].front().first,
                                   [](const auto& e, int idx) { return e.first < idx; });
        if (it != rows[j].end() && it->first == rows[i].front().first) {
          K c = -it->second;
          rows[j] = axpy(rows[j], c, rows[i]);
        }
      }
    }
    return rows;
  }

  std::vector<DenseVec<K>> dense_basis() const {
    std::vector<DenseVec<K>> out;
    for (const auto& r : reduced_basis()) out.push_back(to_dense(r, n_));
    return out;
  }

  static Subspace span(std::size_t n, const std::vector<SparseVec<K>>& vs) {
    Subspace s(n);
    for (const auto& v : vs) s.insert(v);
    return s;
  }
  static Subspace span(std::size_t n, const std::vector<DenseVec<K>>& vs) {
    Subspace s(n);
    for (const auto& v : vs) s.insert(v);
    return s;
  }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    Subspace s = a;
    for (const auto& r : b.rows_) s.insert(r);
    return s;
  }

  /// Zassenhaus intersection.
  static Subspace intersection(const Subspace& a, const Subspace& b) {
    const auto n = static_cast<int>(a.n_);
    Subspace big(2 * a.n_);
    for (const auto& r : a.rows_) {
      SparseVec<K> v = r;
      for (const auto& [i, c] : r) v.emplace_back(i + n, c);
      big.insert(v);
    }
    for (const auto& r : b.rows_) big.insert(r);
    Subspace out(a.n_);
    for (const auto& r : big.rows_) {
      if (r.front().first < n) continue;
      SparseVec<K> v;
      for (const auto& [i, c] : r) v.emplace_back(i - n, c);
      out.insert(v);
    }
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<SparseVec<K>> rows_;
  std::unordered_map<int, std::size_t> pivot_;
};

/// Kernel of the linear map K^m -> K^n sending the c-th unit vector to
/// images[c]. Returned vectors live in K^m.
template <FieldScalar K>
std::vector<SparseVec<K>> kernel(const std::vector<SparseVec<K>>& images, std::size_t n, const FieldSpec& field) {
  const auto shift = static_cast<int>(n);
  Subspace<K> work(n + images.size());
  std::vector<SparseVec<K>> ker;
  for (std::size_t c = 0; c < images.size(); ++c) {
    SparseVec<K> v = images[c];
    v.emplace_back(shift + static_cast<int>(c), K::from_int(1, field));
    auto r = work.reduce(v);
    if (!r.empty() && r.front().first >= shift) {
      SparseVec<K> k;
      for (const auto& [i, a] : r) k.emplace_back(i - shift, a);
      ker.push_back(std::move(k));
    } else {
      work.insert(v);
    }
  }
  return ker;
}

template <FieldScalar K>
std::size_t rank(const std::vector<SparseVec<K>>& vs, std::size_t n) {
  return Subspace<K>::span(n, vs).dim();
}

/// Solve sum_c x_c images[c] = target; nullopt if target is not in the span.
template <FieldScalar K>
std::optional<SparseVec<K>> solve(const std::vector<SparseVec<K>>& images, const SparseVec<K>& target, std::size_t n,
                                  const FieldSpec& field) {
  const auto shift = static_cast<int>(n);
  Subspace<K> work(n + images.size());
  for (std::size_t c = 0; c < images.size(); ++c) {
    SparseVec<K> v = images[c];
    v.emplace_back(shift + static_cast<int>(c), K::from_int(1, field));
    work.insert(v);
  }
  auto r = work.reduce(target);
  if (!r.empty() && r.front().first < shift) return std::nullopt;
  // target - sum x_c images[c] reduces to the tag part -x.
  SparseVec<K> x;
  for (const auto& [i, a] : r) x.emplace_back(i - shift, -a);
  return x;
}

/// Row-major dense matrix.
template <FieldScalar K>
using DenseMat = std::vector<DenseVec<K>>;

template <FieldScalar K>
DenseMat<K> mat_mul(const DenseMat<K>& a, const DenseMat<K>& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size();
  DenseMat<K> c(n, DenseVec<K>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

template <FieldScalar K>
DenseVec<K> mat_vec(const DenseMat<K>& a, const DenseVec<K>& v) {
  DenseVec<K> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) out[i] += a[i][j] * v[j];
  return out;
}

template <FieldScalar K>
DenseMat<K> identity_matrix(std::size_t n, const FieldSpec& field) {
  DenseMat<K> m(n, DenseVec<K>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = K::from_int(1, field);
  return m;
}

template <FieldScalar K>
DenseMat<K> transpose(const DenseMat<K>& a) {
  if (a.empty()) return {};
  DenseMat<K> t(a[0].size(), DenseVec<K>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

template <FieldScalar K>
std::size_t mat_rank(const DenseMat<K>& a) {
  if (a.empty()) return 0;
  return Subspace<K>::span(a[0].size(), a).dim();
}

template <FieldScalar K>
K determinant(DenseMat<K> a, const FieldSpec& field) {
  const std::size_t n = a.size();
  K det = K::from_int(1, field);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return K::from_int(0, field);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det = det * a[c][c];
    K inv = a[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      K f = a[r][c] * inv;
      for (std::size_t j = c; j < n; ++j) a[r][j] = a[r][j] - f * a[c][j];
    }
  }
  return det;
}

}  // namespace gorenstein
