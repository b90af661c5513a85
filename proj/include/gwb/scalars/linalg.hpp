#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gwb/error.hpp"
#include "gwb/scalars/field.hpp"

namespace gwb {

// ---------------------------------------------------------------------------
// Sparse vectors: sorted (index, nonzero value) pairs.
// ---------------------------------------------------------------------------

template <class V>
struct Entry {
  std::uint32_t index;
  V value;

  friend bool operator==(const Entry& a, const Entry& b) { return a.index == b.index && a.value == b.value; }
};

template <ExactField F>
using SparseVec = std::vector<Entry<typename F::value_type>>;

/// Sorts by index, merges duplicates and drops zeros.
template <ExactField F>
void normalize(const F& f, SparseVec<F>& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    auto idx = v[i].index;
    auto acc = v[i].value;
    std::size_t j = i + 1;
    for (; j < v.size() && v[j].index == idx; ++j) acc = f.add(acc, v[j].value);
    if (!f.is_zero(acc)) v[out++] = {idx, std::move(acc)};
    i = j;
  }
  v.resize(out);
}

/// a + c*b for sorted sparse vectors.
template <ExactField F>
SparseVec<F> axpy(const F& f, const SparseVec<F>& a, const typename F::value_type& c, const SparseVec<F>& b) {
  SparseVec<F> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].index < a[i].index) {
      auto v = f.mul(c, b[j].value);
      if (!f.is_zero(v)) r.push_back({b[j].index, std::move(v)});
      ++j;
    } else {
      auto v = f.add(a[i].value, f.mul(c, b[j].value));
      if (!f.is_zero(v)) r.push_back({a[i].index, std::move(v)});
      ++i;
      ++j;
    }
  }
  return r;
}

template <ExactField F>
SparseVec<F> scaled(const F& f, const SparseVec<F>& a, const typename F::value_type& c) {
  SparseVec<F> r;
  if (f.is_zero(c)) return r;
  r.reserve(a.size());
  for (const auto& e : a) r.push_back({e.index, f.mul(c, e.value)});
  return r;
}

template <ExactField F>
SparseVec<F> unit_vector(const F& f, std::uint32_t index) {
  return {{index, f.one()}};
}

template <ExactField F>
SparseVec<F> shifted(const SparseVec<F>& v, std::int64_t offset) {
  SparseVec<F> r = v;
  for (auto& e : r) e.index = static_cast<std::uint32_t>(static_cast<std::int64_t>(e.index) + offset);
  return r;
}

/// Linear map stored as the images of the source basis vectors.
template <ExactField F>
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseVec<F>> columns;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}
};

template <ExactField F>
SparseVec<F> apply(const F& f, const SparseMatrix<F>& m, const SparseVec<F>& v) {
  SparseVec<F> acc;
  for (const auto& e : v)
    for (const auto& t : m.columns[e.index]) acc.push_back({t.index, f.mul(e.value, t.value)});
  normalize(f, acc);
  return acc;
}

template <ExactField F>
SparseMatrix<F> compose(const F& f, const SparseMatrix<F>& outer, const SparseMatrix<F>& inner) {
  if (inner.rows != outer.cols) throw Error("compose: dimension mismatch");
  SparseMatrix<F> r(outer.rows, inner.cols);
  for (std::size_t j = 0; j < inner.cols; ++j) r.columns[j] = apply(f, outer, inner.columns[j]);
  return r;
}

template <ExactField F>
bool is_zero_matrix(const SparseMatrix<F>& m) {
  for (const auto& c : m.columns)
    if (!c.empty()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Echelon: incremental row-echelon basis of a subspace of F^dim.
// Each stored row has leading entry 1 at its pivot, which is its lowest index.
// ---------------------------------------------------------------------------

template <ExactField F>
class Echelon {
 public:
  using V = typename F::value_type;

  Echelon(F field, std::size_t dim) : field_(std::move(field)), dim_(dim), row_of_(dim, -1) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const F& field() const { return field_; }

  bool is_pivot(std::size_t c) const { return row_of_[c] >= 0; }

  /// Remainder of v after eliminating every pivot column.
  SparseVec<F> reduce(SparseVec<F> v) const {
    std::size_t i = 0;
    while (i < v.size()) {
      const auto idx = v[i].index;
      const auto r = row_of_[idx];
      if (r < 0) {
        ++i;
        continue;
      }
      // entries before position i are untouched by the row (its indices are >= idx)
      auto c = field_.neg(v[i].value);
      SparseVec<F> tail(v.begin() + static_cast<std::ptrdiff_t>(i), v.end());
      tail = axpy(field_, tail, c, rows_[static_cast<std::size_t>(r)]);
      v.resize(i);
      v.insert(v.end(), tail.begin(), tail.end());
    }
    return v;
  }

  bool contains(const SparseVec<F>& v) const { return reduce(v).empty(); }

  /// Adds v to the spanning set; true iff it enlarged the subspace.
  bool insert(const SparseVec<F>& v) { return insert_reduced(reduce(v)); }

  /// Adds an already reduced nonzero vector.
  bool insert_reduced(SparseVec<F> r) {
    if (r.empty()) return false;
    auto lead_inv = field_.inv(r.front().value);
    r = scaled(field_, r, lead_inv);
    row_of_[r.front().index] = static_cast<std::int64_t>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

  const std::vector<SparseVec<F>>& rows() const { return rows_; }

  std::vector<std::uint32_t> non_pivots() const {
    std::vector<std::uint32_t> out;
    for (std::size_t c = 0; c < dim_; ++c)
      if (row_of_[c] < 0) out.push_back(static_cast<std::uint32_t>(c));
    return out;
  }

 private:
  F field_;
  std::size_t dim_;
  std::vector<std::int64_t> row_of_;
  std::vector<SparseVec<F>> rows_;
};

template <ExactField F>
std::size_t rank(const F& f, const SparseMatrix<F>& m) {
  Echelon<F> e(f, m.rows);
  for (const auto& c : m.columns) e.insert(c);
  return e.rank();
}

/// Basis of ker(m) via elimination on the augmented columns [m e_j | e_j].
template <ExactField F>
std::vector<SparseVec<F>> kernel_basis(const F& f, const SparseMatrix<F>& m) {
  const auto rows = static_cast<std::uint32_t>(m.rows);
  Echelon<F> e(f, m.rows + m.cols);
  std::vector<SparseVec<F>> out;
  for (std::size_t j = 0; j < m.cols; ++j) {
    SparseVec<F> aug = m.columns[j];
    aug.push_back({rows + static_cast<std::uint32_t>(j), f.one()});
    auto r = e.reduce(std::move(aug));
    if (r.empty()) continue;
    if (r.front().index >= rows) {
      SparseVec<F> k;
      k.reserve(r.size());
      for (const auto& t : r) k.push_back({t.index - rows, t.value});
      out.push_back(std::move(k));
    }
    e.insert_reduced(std::move(r));
  }
  return out;
}

/// Some x with m x = b, if one exists.
template <ExactField F>
std::optional<SparseVec<F>> solve(const F& f, const SparseMatrix<F>& m, const SparseVec<F>& b) {
  const auto rows = static_cast<std::uint32_t>(m.rows);
  Echelon<F> e(f, m.rows + m.cols);
  for (std::size_t j = 0; j < m.cols; ++j) {
    SparseVec<F> aug = m.columns[j];
    aug.push_back({rows + static_cast<std::uint32_t>(j), f.one()});
    e.insert(aug);
  }
  auto r = e.reduce(b);
  if (!r.empty() && r.front().index < rows) return std::nullopt;
  SparseVec<F> x;
  for (const auto& t : r) x.push_back({t.index - rows, f.neg(t.value)});
  return x;
}

// ---------------------------------------------------------------------------
// Dense matrices
// ---------------------------------------------------------------------------

template <ExactField F>
class Matrix {
 public:
  using V = typename F::value_type;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  /// Rows given as integers, reduced into the field.
  Matrix(F field, const std::vector<std::vector<long long>>& rows) : Matrix(std::move(field), rows.size(), rows.empty() ? 0 : rows[0].size()) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (rows[i].size() != cols_) throw InputError("ragged matrix rows");
      for (std::size_t j = 0; j < cols_; ++j) at(i, j) = field_.from_int(rows[i][j]);
    }
  }

  static Matrix identity(F field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.field_.one();
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  V& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const V& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Stores v after checking that it is an element of this matrix's field.
  void set(std::size_t i, std::size_t j, V v) {
    if (!field_.contains(v)) throw DomainError("entry does not belong to " + field_.name());
    at(i, j) = std::move(v);
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (!(a.field_ == b.field_)) throw DomainError("mixed-field matrix product");
    if (a.cols_ != b.rows_) throw Error("matrix product: dimension mismatch");
    Matrix r(a.field_, a.rows_, b.cols_);
    const auto& f = a.field_;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (f.is_zero(a.at(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) = f.add(r.at(i, j), f.mul(a.at(i, k), b.at(k, j)));
      }
    return r;
  }

  std::vector<V> operator*(const std::vector<V>& v) const {
    if (v.size() != cols_) throw Error("matrix-vector product: dimension mismatch");
    std::vector<V> r(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] = field_.add(r[i], field_.mul(at(i, j), v[j]));
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!a.field_.is_zero(a.field_.sub(a.data_[i], b.data_[i]))) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!field_.is_zero(v)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  SparseMatrix<F> to_sparse() const {
    SparseMatrix<F> s(rows_, cols_);
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t i = 0; i < rows_; ++i)
        if (!field_.is_zero(at(i, j))) s.columns[j].push_back({static_cast<std::uint32_t>(i), at(i, j)});
    return s;
  }

 private:
  F field_;
  std::size_t rows_, cols_;
  std::vector<V> data_;
};

namespace detail {

/// Reduced row echelon form; returns pivot columns. Plain Gaussian elimination.
template <ExactField F>
std::vector<std::size_t> rref_in_place(Matrix<F>& m) {
  const auto& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && f.is_zero(m.at(sel, c))) ++sel;
    if (sel == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(sel, j));
    auto inv = f.inv(m.at(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m.at(i, c))) continue;
      auto factor = m.at(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Over QQ: clear denominators row by row, run fraction-free (Bareiss)
/// forward elimination over the integers, and divide only once at the end
/// to reach reduced row echelon form.
inline std::vector<std::size_t> rref_in_place(Matrix<Rationals>& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
  for (std::size_t i = 0; i < R; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < C; ++j) a[i][j] = m.at(i, j).get_num() * (l / m.at(i, j).get_den());
  }
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t sel = r;
    while (sel < R && a[sel][c] == 0) ++sel;
    if (sel == R) continue;
    std::swap(a[r], a[sel]);
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < C; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  // back substitution in QQ on the integer echelon form
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) m.at(i, j) = i < r ? mpq_class(a[i][j]) : mpq_class(0);
  for (std::size_t k = r; k-- > 0;) {
    const auto pc = pivots[k];
    mpq_class inv = 1 / m.at(k, pc);
    for (std::size_t j = 0; j < C; ++j) m.at(k, j) *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      if (sgn(m.at(i, pc)) == 0) continue;
      mpq_class factor = m.at(i, pc);
      for (std::size_t j = 0; j < C; ++j) m.at(i, j) -= factor * m.at(k, j);
    }
  }
  return pivots;
}

}  // namespace detail

template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
  Matrix<F> w = m;
  return detail::rref_in_place(w).size();
}

template <ExactField F>
std::vector<std::vector<typename F::value_type>> kernel_basis(const Matrix<F>& m) {
  Matrix<F> w = m;
  const auto pivots = detail::rref_in_place(w);
  const auto& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<typename F::value_type>> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::value_type> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = f.neg(w.at(k, free));
    out.push_back(std::move(v));
  }
  return out;
}

/// Basis of the column space, as a subset of the original columns.
template <ExactField F>
std::vector<std::vector<typename F::value_type>> image_basis(const Matrix<F>& m) {
  Matrix<F> w = m;
  const auto pivots = detail::rref_in_place(w);
  std::vector<std::vector<typename F::value_type>> out;
  for (auto c : pivots) {
    std::vector<typename F::value_type> col(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) col[i] = m.at(i, c);
    out.push_back(std::move(col));
  }
  return out;
}

template <ExactField F>
std::optional<std::vector<typename F::value_type>> solve(const Matrix<F>& m, const std::vector<typename F::value_type>& b) {
  if (b.size() != m.rows()) throw Error("solve: dimension mismatch");
  const auto& f = m.field();
  Matrix<F> aug(f, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  const auto pivots = detail::rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<typename F::value_type> x(m.cols(), f.zero());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, m.cols());
  return x;
}

}  // namespace gwb
