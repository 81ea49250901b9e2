// Copyright 2026 The quivalg Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Column-major sparse matrices: each column is a row-sorted list of
// (row, value) pairs. Value type is a template parameter so the same code
// serves integer generator matrices, exact rational matrices and doubles.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <ostream>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quivalg/scalar.hpp"

namespace quivalg {

namespace detail {
inline long conj_value(long v) { return v; }
inline Complex conj_value(const Complex& v) { return v.conj(); }
inline std::complex<double> conj_value(const std::complex<double>& v) { return std::conj(v); }

inline bool is_zero_value(long v) { return v == 0; }
inline bool is_zero_value(const Complex& v) { return v.is_zero(); }
inline bool is_zero_value(const std::complex<double>& v) { return v == 0.0; }

inline std::pair<double, double> parts(long v) { return {static_cast<double>(v), 0.0}; }
inline std::pair<double, double> parts(const Complex& v) {
  return {v.re().get_d(), v.im().get_d()};
}
inline std::pair<double, double> parts(const std::complex<double>& v) {
  return {v.real(), v.imag()};
}
}  // namespace detail

template <typename T>
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, T>;
  using Column = std::vector<Entry>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(cols) {}

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, T(1));
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const Entry> column(std::size_t j) const { return data_.at(j); }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : data_) n += c.size();
    return n;
  }

  /// Adds v at (i, j); keeps the column sorted and free of zeros.
  void add(std::size_t i, std::size_t j, const T& v) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("SparseMatrix::add");
    if (detail::is_zero_value(v)) return;
    auto& col = data_[j];
    auto it = std::lower_bound(col.begin(), col.end(), i,
                               [](const Entry& e, std::size_t r) { return e.first < r; });
    if (it != col.end() && it->first == i) {
      it->second += v;
      if (detail::is_zero_value(it->second)) col.erase(it);
    } else {
      col.insert(it, Entry{i, v});
    }
  }

  T at(std::size_t i, std::size_t j) const {
    const auto& col = data_.at(j);
    auto it = std::lower_bound(col.begin(), col.end(), i,
                               [](const Entry& e, std::size_t r) { return e.first < r; });
    if (it != col.end() && it->first == i) return it->second;
    return T(0);
  }

  /// Conjugate transpose.
  SparseMatrix adjoint() const {
    SparseMatrix r(cols_, rows_);
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [i, v] : data_[j]) r.data_[i].emplace_back(j, detail::conj_value(v));
    return r;  // columns are filled in increasing j, hence sorted
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("SparseMatrix: shape mismatch");
    SparseMatrix r(a.rows_, b.cols_);
    for (std::size_t j = 0; j < b.cols_; ++j) r.data_[j] = a.apply_column(b.data_[j]);
    return r;
  }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    return combine(a, b, false);
  }
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    return combine(a, b, true);
  }
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Column& c) { return c.empty(); });
  }

  /// A * x for a sparse column x.
  Column apply_column(std::span<const Entry> x) const {
    Column acc;
    for (const auto& [k, xv] : x)
      for (const auto& [i, av] : data_[k]) acc.emplace_back(i, av * xv);
    return normalize(std::move(acc));
  }

  /// Dense y = A x.
  template <typename V>
  void apply(std::span<const V> x, std::span<V> y) const {
    std::fill(y.begin(), y.end(), V(0));
    for (std::size_t j = 0; j < cols_; ++j) {
      if (x[j] == V(0)) continue;
      for (const auto& [i, v] : data_[j]) y[i] += V(v) * x[j];
    }
  }

  /// Dense y = A^* x.
  template <typename V>
  void apply_adjoint(std::span<const V> x, std::span<V> y) const {
    for (std::size_t j = 0; j < cols_; ++j) {
      V s(0);
      for (const auto& [i, v] : data_[j]) s += std::conj(V(v)) * x[i];
      y[j] = s;
    }
  }

  /// Element-wise conversion.
  template <typename U, typename F>
  SparseMatrix<U> map(F f) const {
    SparseMatrix<U> r(rows_, cols_);
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [i, v] : data_[j]) r.add(i, j, f(v));
    return r;
  }

  /// Coordinate text: "rows cols nnz" header, then "row col re im" per entry.
  void write_coo(std::ostream& os) const {
    os << rows_ << ' ' << cols_ << ' ' << nonzeros() << '\n';
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& [i, v] : data_[j]) {
        auto [re, im] = detail::parts(v);
        os << i << ' ' << j << ' ' << re << ' ' << im << '\n';
      }
  }

 private:
  template <typename> friend class SparseMatrix;

  static Column normalize(Column acc) {
    std::stable_sort(acc.begin(), acc.end(),
                     [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Column out;
    for (auto& e : acc) {
      if (!out.empty() && out.back().first == e.first) {
        out.back().second += e.second;
      } else {
        if (!out.empty() && detail::is_zero_value(out.back().second)) out.pop_back();
        out.push_back(std::move(e));
      }
    }
    if (!out.empty() && detail::is_zero_value(out.back().second)) out.pop_back();
    return out;
  }

  static SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, bool subtract) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("SparseMatrix: shape mismatch");
    SparseMatrix r(a.rows_, a.cols_);
    for (std::size_t j = 0; j < a.cols_; ++j) {
      Column acc = a.data_[j];
      for (const auto& [i, v] : b.data_[j]) acc.emplace_back(i, subtract ? T(-v) : v);
      r.data_[j] = normalize(std::move(acc));
    }
    return r;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Column> data_;
};

using IntMatrix = SparseMatrix<long>;
using ExactMatrix = SparseMatrix<Complex>;
using DoubleMatrix = SparseMatrix<std::complex<double>>;

}  // namespace quivalg
