#pragma once

#include <algorithm>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "error.hpp"
#include "scalar.hpp"

namespace joinring {

template <typename T>
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), e_(rows * cols, fill) {}

  static Matrix zero(std::size_t rows, std::size_t cols, const T& like) {
    return Matrix(rows, cols, scalar_zero(like));
  }
  static Matrix identity(std::size_t n, const T& like) {
    Matrix m = zero(n, n, like);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar_one(like);
    return m;
  }
  static Matrix ones(std::size_t rows, std::size_t cols, const T& like) {
    return Matrix(rows, cols, scalar_one(like));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  // Any entry, for domain prototyping.
  const T& like() const {
    if (e_.empty()) throw input_error("empty matrix has no scalar domain");
    return e_[0];
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.same_shape(b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] + b.e_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.same_shape(b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] - b.e_[i];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw input_error("matrix product shape mismatch");
    if (a.empty() || b.empty()) throw input_error("matrix product on empty matrix");
    Matrix r = zero(a.rows_, b.cols_, a.like());
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + aik * b(k, j);
      }
    return r;
  }
  friend Matrix operator*(const T& s, const Matrix& m) {
    Matrix r = m;
    for (auto& x : r.e_) x = s * x;
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  Matrix transpose() const {
    if (empty()) return Matrix(cols_, rows_, T{});
    Matrix r(cols_, rows_, e_[0]);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Matrix submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                   std::size_t ncols) const {
    Matrix r(nrows, ncols, like());
    for (std::size_t i = 0; i < nrows; ++i)
      for (std::size_t j = 0; j < ncols; ++j) r(i, j) = (*this)(row0 + i, col0 + j);
    return r;
  }

private:
  void same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw input_error("matrix shape mismatch");
  }
  std::size_t rows_, cols_;
  std::vector<T> e_;
};

namespace detail {

inline double abs_of(const Cplx& x) { return std::abs(x); }

// Entries at or below 1e-9 relative to the largest initial magnitude count as
// zero in complex elimination; exact domains compare against zero itself.
template <typename T>
double zero_threshold(const Matrix<T>& m) {
  if constexpr (scalar_traits<T>::exact) {
    (void)m;
    return 0.0;
  } else {
    double mx = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) mx = std::max(mx, abs_of(m(i, j)));
    return 1e-9 * mx;
  }
}

template <typename T>
bool is_zero_at(const T& x, double threshold, const T& like) {
  if constexpr (scalar_traits<T>::exact) {
    (void)threshold;
    return x == scalar_zero(like);
  } else {
    return abs_of(x) <= threshold;
  }
}

// Pivot row at or below `col`, looking at rows [row, rows). Exact domains take
// the first nonzero; complex takes the largest magnitude.
template <typename T>
std::optional<std::size_t> pick_pivot(const Matrix<T>& m, std::size_t row, std::size_t col,
                                      double threshold) {
  if constexpr (scalar_traits<T>::exact) {
    for (std::size_t i = row; i < m.rows(); ++i)
      if (!is_zero_at(m(i, col), threshold, m.like())) return i;
    return std::nullopt;
  } else {
    std::size_t best = row;
    double best_abs = -1.0;
    for (std::size_t i = row; i < m.rows(); ++i) {
      double a = abs_of(m(i, col));
      if (a > best_abs) {
        best_abs = a;
        best = i;
      }
    }
    if (best_abs <= threshold) return std::nullopt;
    return best;
  }
}

}  // namespace detail

struct RankNullity {
  std::size_t rank = 0;
  std::size_t nullity = 0;
};

// Exact domains admit either pivot choice; results must agree. Complex always
// pivots on the largest magnitude.
enum class Pivoting { first_nonzero, last_nonzero };

namespace detail {

template <typename T>
std::optional<std::size_t> pick_pivot_strategy(const Matrix<T>& m, std::size_t row,
                                               std::size_t col, double threshold,
                                               Pivoting strategy) {
  if constexpr (scalar_traits<T>::exact) {
    if (strategy == Pivoting::last_nonzero) {
      for (std::size_t i = m.rows(); i-- > row;)
        if (!is_zero_at(m(i, col), threshold, m.like())) return i;
      return std::nullopt;
    }
  }
  (void)strategy;
  return pick_pivot(m, row, col, threshold);
}

}  // namespace detail

template <typename T>
RankNullity rank_nullity(Matrix<T> m, Pivoting strategy = Pivoting::first_nonzero) {
  if (m.empty()) throw input_error("rank of an empty matrix");
  const double thr = detail::zero_threshold(m);
  const T like = m.like();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    auto piv = detail::pick_pivot_strategy(m, rank, col, thr, strategy);
    if (!piv) continue;
    if (*piv != rank)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(rank, j), m(*piv, j));
    const T inv = scalar_div(scalar_one(like), m(rank, col));
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (detail::is_zero_at(m(i, col), thr, like)) continue;
      const T factor = m(i, col) * inv;
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - factor * m(rank, j);
    }
    ++rank;
  }
  return {rank, m.cols() - rank};
}

template <typename T>
struct DetInverse {
  T det;
  std::optional<Matrix<T>> inverse;
};

template <typename T>
DetInverse<T> det_inverse(const Matrix<T>& input) {
  if (input.empty() || input.rows() != input.cols())
    throw input_error("determinant requires a nonempty square matrix");
  Matrix<T> m = input;
  const double thr = detail::zero_threshold(m);
  const T like = m.like();
  const std::size_t n = m.rows();
  Matrix<T> inv = Matrix<T>::identity(n, like);
  T det = scalar_one(like);
  bool singular = false;
  for (std::size_t col = 0; col < n; ++col) {
    auto piv = detail::pick_pivot(m, col, col, thr);
    if (!piv) {
      singular = true;
      break;
    }
    if (*piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(col, j), m(*piv, j));
        std::swap(inv(col, j), inv(*piv, j));
      }
      det = -det;
    }
    det = det * m(col, col);
    const T pivot_inv = scalar_div(scalar_one(like), m(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) = m(col, j) * pivot_inv;
      inv(col, j) = inv(col, j) * pivot_inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      const T factor = m(i, col);
      if (detail::is_zero_at(factor, thr, like)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = m(i, j) - factor * m(col, j);
        inv(i, j) = inv(i, j) - factor * inv(col, j);
      }
    }
  }
  if (singular) return {scalar_zero(like), std::nullopt};
  return {det, std::move(inv)};
}

// Common value of all row sums and all column sums, when they agree.
template <typename T>
std::optional<T> semimagic_sum(const Matrix<T>& m) {
  if (m.empty() || m.rows() != m.cols()) return std::nullopt;
  const T like = m.like();
  T s = scalar_zero(like);
  for (std::size_t j = 0; j < m.cols(); ++j) s = s + m(0, j);
  for (std::size_t i = 1; i < m.rows(); ++i) {
    T r = scalar_zero(like);
    for (std::size_t j = 0; j < m.cols(); ++j) r = r + m(i, j);
    if (!(r == s)) return std::nullopt;
  }
  for (std::size_t j = 0; j < m.cols(); ++j) {
    T c = scalar_zero(like);
    for (std::size_t i = 0; i < m.rows(); ++i) c = c + m(i, j);
    if (!(c == s)) return std::nullopt;
  }
  return s;
}

template <typename T>
struct RowEchelon {
  Matrix<T> mat;
  std::vector<std::size_t> pivot_cols;
};

template <typename T>
RowEchelon<T> reduced_row_echelon(Matrix<T> m) {
  if (m.empty()) throw input_error("row reduction of an empty matrix");
  const double thr = detail::zero_threshold(m);
  const T like = m.like();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    auto piv = detail::pick_pivot(m, row, col, thr);
    if (!piv) continue;
    if (*piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(*piv, j));
    const T inv = scalar_div(scalar_one(like), m(row, col));
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || detail::is_zero_at(m(i, col), thr, like)) continue;
      const T factor = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) - factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

// Basis of {x : m x = 0}, one vector per free column, ascending.
template <typename T>
std::vector<std::vector<T>> null_space(const Matrix<T>& m) {
  auto [r, pivots] = reduced_row_echelon(m);
  const T like = m.like();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), scalar_zero(like));
    v[free] = scalar_one(like);
    for (std::size_t row = 0; row < pivots.size(); ++row) v[pivots[row]] = -r(row, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Monic characteristic polynomial over an exact field, low degree first:
// det(tI - A) = c[0] + c[1] t + ... + c[n] t^n. Hessenberg reduction followed
// by the leading-minor recurrence; sound in any characteristic.
template <typename T>
std::vector<T> field_char_poly(Matrix<T> h) {
  static_assert(scalar_traits<T>::exact);
  if (h.empty() || h.rows() != h.cols())
    throw input_error("characteristic polynomial requires a nonempty square matrix");
  const std::size_t n = h.rows();
  const T like = h.like();
  const T zero = scalar_zero(like), one = scalar_one(like);
  for (std::size_t col = 0; col + 2 < n; ++col) {
    std::size_t piv = 0;
    bool found = false;
    for (std::size_t i = col + 1; i < n; ++i)
      if (!(h(i, col) == zero)) {
        piv = i;
        found = true;
        break;
      }
    if (!found) continue;
    if (piv != col + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(col + 1, j), h(piv, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, col + 1), h(i, piv));
    }
    const T inv = scalar_div(one, h(col + 1, col));
    for (std::size_t i = col + 2; i < n; ++i) {
      if (h(i, col) == zero) continue;
      const T u = h(i, col) * inv;
      for (std::size_t j = 0; j < n; ++j) h(i, j) = h(i, j) - u * h(col + 1, j);
      for (std::size_t r = 0; r < n; ++r) h(r, col + 1) = h(r, col + 1) + u * h(r, i);
    }
  }
  std::vector<std::vector<T>> p(n + 1);
  p[0] = {one};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<T> q(m + 1, zero);
    for (std::size_t k = 0; k < m; ++k) {
      q[k + 1] = q[k + 1] + p[m - 1][k];
      q[k] = q[k] - h(m - 1, m - 1) * p[m - 1][k];
    }
    T prod = one;
    for (std::size_t i = 1; i < m; ++i) {
      prod = prod * h(m - i, m - i - 1);
      if (prod == zero) break;
      const T coef = h(m - 1 - i, m - 1) * prod;
      if (coef == zero) continue;
      for (std::size_t k = 0; k < m - i; ++k) q[k] = q[k] - coef * p[m - 1 - i][k];
    }
    p[m] = std::move(q);
  }
  return p[n];
}

// Entrywise agreement; abs_tol only matters for complex entries.
template <typename T>
bool entries_equal(const T& a, const T& b, double abs_tol) {
  if constexpr (scalar_traits<T>::exact) {
    (void)abs_tol;
    return a == b;
  } else {
    return detail::abs_of(a - b) <= abs_tol;
  }
}

// Largest entry magnitude (0 for exact domains, where scale is meaningless).
template <typename T>
double matrix_scale(const Matrix<T>& m) {
  if constexpr (scalar_traits<T>::exact) {
    (void)m;
    return 0.0;
  } else {
    double mx = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) mx = std::max(mx, detail::abs_of(m(i, j)));
    return mx;
  }
}

template <typename T>
bool matrices_agree(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const double tol = 1e-9 * std::max(1.0, std::max(matrix_scale(a), matrix_scale(b)));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!entries_equal(a(i, j), b(i, j), tol)) return false;
  return true;
}

// Monic characteristic polynomial of a complex matrix, low degree first:
// det(tI - A) = c[0] + c[1] t + ... + c[n] t^n.
inline std::vector<Cplx> characteristic_polynomial(const Matrix<Cplx>& a) {
  if (a.empty() || a.rows() != a.cols())
    throw input_error("characteristic polynomial requires a nonempty square matrix");
  const std::size_t n = a.rows();
  std::vector<Cplx> c(n + 1, Cplx(0.0, 0.0));
  c[n] = Cplx(1.0, 0.0);
  Matrix<Cplx> m = Matrix<Cplx>::identity(n, Cplx(0.0, 0.0));
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    Cplx tr(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) tr += m(i, i);
    const Cplx ck = -tr / static_cast<double>(k);
    c[n - k] = ck;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += ck;
  }
  return c;
}

// All n eigenvalues with multiplicity, by simultaneous root iteration on the
// characteristic polynomial. Matrices above 64x64 are out of scope.
inline std::vector<Cplx> complex_eigenvalues(const Matrix<Cplx>& a) {
  if (a.empty() || a.rows() != a.cols())
    throw input_error("eigenvalues require a nonempty square matrix");
  const std::size_t n = a.rows();
  if (n > 64) throw hypothesis_error("eigenvalue solver limited to dimension 64");
  const std::vector<Cplx> c = characteristic_polynomial(a);
  auto eval = [&](Cplx z) {
    Cplx v = c[n];
    for (std::size_t k = n; k-- > 0;) v = v * z + c[k];
    return v;
  };
  if (n == 1) return {-c[0]};

  std::vector<Cplx> z(n);
  const Cplx seed(0.4, 0.9);
  z[0] = seed;
  for (std::size_t i = 1; i < n; ++i) z[i] = z[i - 1] * seed;

  const int max_iter = 500;
  const double tol = 1e-12;
  for (int it = 0; it < max_iter; ++it) {
    double max_move = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Cplx denom(1.0, 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        Cplx d = z[i] - z[j];
        if (std::abs(d) < 1e-30) d = Cplx(1e-30, 0.0);
        denom *= d;
      }
      const Cplx step = eval(z[i]) / denom;
      z[i] -= step;
      max_move = std::max(max_move, std::abs(step));
    }
    if (max_move < tol) break;
  }
  double scale = 1.0;
  for (const Cplx& ck : c) scale = std::max(scale, std::abs(ck));
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(eval(z[i])) > 1e-8 * scale)
      throw numeric_error("eigenvalue iteration did not converge");
  return z;
}

}  // namespace joinring
