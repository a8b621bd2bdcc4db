#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tdhom/error.hpp"
#include "tdhom/scalar.hpp"

namespace tdhom {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static RationalMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw ShapeError("ragged row in matrix construction");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static RationalMatrix from_columns(const std::vector<Vector>& columns, std::size_t rows) {
    RationalMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw ShapeError("ragged column in matrix construction");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const { return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
  Vector column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  bool is_zero() const { return tdhom::is_zero(data_); }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
    RationalMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Vector operator*(const RationalMatrix& a, const Vector& x) {
    if (a.cols_ != x.size()) throw ShapeError("matrix-vector shape mismatch");
    Vector y(a.rows_, Scalar(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (x[j] != 0) y[i] += a(i, j) * x[j];
    return y;
  }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

namespace detail {

/// Fraction-free (Bareiss) row echelon form of an integer-scaled copy of a
/// rational matrix. Pivots are the first nonzero entry scanning down each
/// column, so the result is deterministic.
struct Echelon {
  std::vector<std::vector<mpz_class>> rows;
  std::vector<std::size_t> pivot_cols;
  std::size_t cols = 0;
};

inline Echelon bareiss_echelon(const RationalMatrix& m) {
  Echelon e;
  e.cols = m.cols();
  e.rows.resize(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class scale = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& q = m(i, j);
      if (q != 0) e.rows[i][j] = q.get_num() * (scale / q.get_den());
    }
  }

  auto& a = e.rows;
  mpz_class prev = 1;
  std::size_t r = 0;
  mpz_class t1, t2;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const mpz_class& piv = a[r][c];
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      const mpz_class lead = a[i][c];
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        t1 = piv * a[i][j];
        t2 = lead * a[r][j];
        t1 -= t2;
        mpz_divexact(a[i][j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = piv;
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

/// Solves the echelon system for given values of the free columns.
inline Vector back_substitute(const Echelon& e, Vector x) {
  for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
    const auto pc = e.pivot_cols[k];
    Scalar acc = 0;
    for (std::size_t j = pc + 1; j < e.cols; ++j)
      if (x[j] != 0 && e.rows[k][j] != 0) acc += Scalar(e.rows[k][j]) * x[j];
    x[pc] = -acc / Scalar(e.rows[k][pc]);
  }
  return x;
}

}  // namespace detail

inline std::size_t rank(const RationalMatrix& m) {
  if (m.rows() > m.cols() * 4 && m.cols() > 0) {
    // Same rank; eliminating over the short side keeps the sweep small.
    return detail::bareiss_echelon(m.transpose()).pivot_cols.size();
  }
  return detail::bareiss_echelon(m).pivot_cols.size();
}

/// Basis of the null space, one vector per free column (free entry 1, other
/// free entries 0). The count is always cols − rank.
inline std::vector<Vector> kernel_basis(const RationalMatrix& m) {
  const auto e = detail::bareiss_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector x(m.cols(), Scalar(0));
    x[f] = 1;
    basis.push_back(detail::back_substitute(e, std::move(x)));
  }
  return basis;
}

/// One solution of m·x = b, or nullopt when the system is inconsistent.
inline std::optional<Vector> solve(const RationalMatrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw ShapeError("right-hand side length does not match matrix rows");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto e = detail::bareiss_echelon(aug);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
  Vector x(m.cols() + 1, Scalar(0));
  x[m.cols()] = -1;
  x = detail::back_substitute(e, std::move(x));
  x.pop_back();
  return x;
}

/// Rank of a set of equal-length vectors.
inline std::size_t rank_of_vectors(const std::vector<Vector>& vs, std::size_t length) {
  if (vs.empty()) return 0;
  return rank(RationalMatrix::from_rows(vs, length));
}

}  // namespace tdhom
