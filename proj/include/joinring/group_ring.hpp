#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "matrix.hpp"
#include "scalar.hpp"

namespace joinring {

template <typename T>
class GroupRingElement {
public:
  GroupRingElement(GroupPtr group, std::vector<T> coeffs)
      : group_(std::move(group)), c_(std::move(coeffs)) {
    if (!group_) throw input_error("group ring element without a group");
    if (c_.size() != group_->order())
      throw input_error("coefficient count does not match group order");
  }

  static GroupRingElement zero(const GroupPtr& g, const T& like) {
    return GroupRingElement(g, std::vector<T>(g_order(g), scalar_zero(like)));
  }
  static GroupRingElement one(const GroupPtr& g, const T& like) {
    std::vector<T> c(g_order(g), scalar_zero(like));
    c[Group::identity()] = scalar_one(like);
    return GroupRingElement(g, std::move(c));
  }
  static GroupRingElement basis(const GroupPtr& g, unsigned element, const T& like) {
    if (element >= g_order(g)) throw input_error("group element index out of range");
    std::vector<T> c(g_order(g), scalar_zero(like));
    c[element] = scalar_one(like);
    return GroupRingElement(g, std::move(c));
  }
  // Sum of all group elements (not averaged).
  static GroupRingElement all_ones(const GroupPtr& g, const T& like) {
    return GroupRingElement(g, std::vector<T>(g_order(g), scalar_one(like)));
  }

  const GroupPtr& group() const { return group_; }
  const std::vector<T>& coeffs() const { return c_; }
  const T& operator[](std::size_t i) const { return c_[i]; }
  std::size_t size() const { return c_.size(); }
  const T& like() const { return c_[0]; }

  friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
    a.compatible(b);
    std::vector<T> c = a.c_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = c[i] + b.c_[i];
    return GroupRingElement(a.group_, std::move(c));
  }
  friend GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
    a.compatible(b);
    std::vector<T> c = a.c_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = c[i] - b.c_[i];
    return GroupRingElement(a.group_, std::move(c));
  }
  GroupRingElement operator-() const {
    std::vector<T> c = c_;
    for (auto& x : c) x = -x;
    return GroupRingElement(group_, std::move(c));
  }
  friend GroupRingElement operator*(const T& s, const GroupRingElement& a) {
    std::vector<T> c = a.c_;
    for (auto& x : c) x = s * x;
    return GroupRingElement(a.group_, std::move(c));
  }
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return same_group(a.group_, b.group_) && a.c_ == b.c_;
  }

  void compatible(const GroupRingElement& b) const {
    if (!same_group(group_, b.group_))
      throw input_error("group ring elements live over different groups");
  }

private:
  static unsigned g_order(const GroupPtr& g) {
    if (!g) throw input_error("group ring element without a group");
    return g->order();
  }
  GroupPtr group_;
  std::vector<T> c_;
};

// (xy)_g = sum over factorizations g = h k.
template <typename T>
GroupRingElement<T> convolve(const GroupRingElement<T>& x, const GroupRingElement<T>& y) {
  x.compatible(y);
  const Group& g = *x.group();
  const T zero = scalar_zero(x.like());
  std::vector<T> c(g.order(), zero);
  for (unsigned h = 0; h < g.order(); ++h) {
    if (x[h] == zero) continue;
    for (unsigned k = 0; k < g.order(); ++k) c[g.mul(h, k)] = c[g.mul(h, k)] + x[h] * y[k];
  }
  return GroupRingElement<T>(x.group(), std::move(c));
}

template <typename T>
T augment(const GroupRingElement<T>& x) {
  T s = scalar_zero(x.like());
  for (std::size_t i = 0; i < x.size(); ++i) s = s + x[i];
  return s;
}

// Coefficients of the transposed circulant: g -> coefficient of g^{-1}.
template <typename T>
GroupRingElement<T> ring_transpose(const GroupRingElement<T>& x) {
  const Group& g = *x.group();
  std::vector<T> c(g.order(), scalar_zero(x.like()));
  for (unsigned j = 0; j < g.order(); ++j) c[j] = x[g.inv(j)];
  return GroupRingElement<T>(x.group(), std::move(c));
}

// A[i][j] = coefficient of g_i^{-1} g_j.
template <typename T>
Matrix<T> to_circulant(const GroupRingElement<T>& x) {
  const Group& g = *x.group();
  Matrix<T> m = Matrix<T>::zero(g.order(), g.order(), x.like());
  for (unsigned i = 0; i < g.order(); ++i)
    for (unsigned j = 0; j < g.order(); ++j) m(i, j) = x[g.mul(g.inv(i), j)];
  return m;
}

enum class PermSide { left, right };

// Left: P[i][j] = 1 iff g g_i = g_j. Right: P[i][j] = 1 iff g_i g = g_j.
template <typename T>
Matrix<T> perm_matrix(const GroupPtr& gp, unsigned g, PermSide side, const T& like) {
  const Group& gr = *gp;
  if (g >= gr.order()) throw input_error("group element index out of range");
  Matrix<T> m = Matrix<T>::zero(gr.order(), gr.order(), like);
  for (unsigned i = 0; i < gr.order(); ++i) {
    const unsigned j = side == PermSide::left ? gr.mul(g, i) : gr.mul(i, g);
    m(i, j) = scalar_one(like);
  }
  return m;
}

// Simultaneous left-translation invariance, and commutation with every left
// permutation matrix. The two characterizations must agree.
template <typename T>
bool is_g_circulant(const Matrix<T>& m, const GroupPtr& gp) {
  const Group& g = *gp;
  const unsigned n = g.order();
  if (m.rows() != n || m.cols() != n)
    throw input_error("matrix size does not match group order");
  const double tol = 1e-9 * std::max(1.0, matrix_scale(m));
  bool invariant = true;
  for (unsigned t = 0; t < n && invariant; ++t)
    for (unsigned i = 0; i < n && invariant; ++i)
      for (unsigned j = 0; j < n; ++j)
        if (!entries_equal(m(g.mul(t, i), g.mul(t, j)), m(i, j), tol)) {
          invariant = false;
          break;
        }
  bool commutes = true;
  const T like = m.like();
  for (unsigned t = 0; t < n && commutes; ++t) {
    const Matrix<T> p = perm_matrix(gp, t, PermSide::left, like);
    if (!matrices_agree(p * m, m * p)) commutes = false;
  }
  if (invariant != commutes)
    throw std::logic_error("translation invariance and commutation tests disagree");
  return invariant;
}

// Reads coefficients off the first row; requires the circulant structure.
template <typename T>
GroupRingElement<T> from_circulant(const Matrix<T>& m, const GroupPtr& gp) {
  if (!is_g_circulant(m, gp)) throw input_error("matrix is not a G-circulant");
  std::vector<T> c(gp->order(), scalar_zero(m.like()));
  for (unsigned j = 0; j < gp->order(); ++j) c[j] = m(0, j);
  return GroupRingElement<T>(gp, std::move(c));
}

template <typename T>
std::optional<GroupRingElement<T>> unit_inverse(const GroupRingElement<T>& x) {
  auto [det, inv] = det_inverse(to_circulant(x));
  if (!inv) return std::nullopt;
  std::vector<T> c(x.size(), scalar_zero(x.like()));
  for (std::size_t j = 0; j < x.size(); ++j) c[j] = (*inv)(0, j);
  return GroupRingElement<T>(x.group(), std::move(c));
}

// Augmentation zero and circulant nullity exactly one.
template <typename T>
bool is_almost_invertible(const GroupRingElement<T>& x) {
  if (!(augment(x) == scalar_zero(x.like()))) return false;
  return rank_nullity(to_circulant(x)).nullity == 1;
}

// (1/|G|) sum of all group elements; requires |G| invertible in the field.
template <typename T>
GroupRingElement<T> idempotent_eG(const GroupPtr& gp, const T& like) {
  const std::uint32_t p = scalar_traits<T>::characteristic(like);
  if (p != 0 && gp->order() % p == 0)
    throw hypothesis_error("group order is not invertible in characteristic " +
                           std::to_string(p));
  const T inv_n = scalar_div(scalar_one(like), scalar_from_int(like, gp->order()));
  return GroupRingElement<T>(gp, std::vector<T>(gp->order(), inv_n));
}

namespace detail {

// Jacobson radical of a finite-dimensional unital algebra over a prime field,
// given by a multiplication on coordinate vectors. Iterated kernels of the
// characteristic-coefficient pairings c_{p^i}(xy) on the left-regular
// representation, the characteristic-p extension of the trace-form criterion.
template <typename Mult>
std::vector<std::vector<Fp>> fp_algebra_radical(std::size_t dim, std::uint32_t p, Mult mult) {
  const Fp zero(0, p), one(1, p);
  const auto e = [&](std::size_t i) {
    std::vector<Fp> v(dim, zero);
    v[i] = one;
    return v;
  };
  auto rep = [&](const std::vector<Fp>& x) {
    Matrix<Fp> m = Matrix<Fp>::zero(dim, dim, zero);
    for (std::size_t j = 0; j < dim; ++j) {
      const std::vector<Fp> col = mult(x, e(j));
      for (std::size_t i = 0; i < dim; ++i) m(i, j) = col[i];
    }
    return m;
  };

  // Current subspace basis, as rows in algebra coordinates.
  std::vector<std::vector<Fp>> basis;
  for (std::size_t i = 0; i < dim; ++i) basis.push_back(e(i));

  std::size_t steps = 1;
  for (std::uint64_t q = p; q <= dim; q *= p) ++steps;
  std::uint64_t pi = 1;
  for (std::size_t step = 0; step < steps && !basis.empty(); ++step, pi *= p) {
    const std::size_t m = basis.size();
    Matrix<Fp> pairing = Matrix<Fp>::zero(m, m, zero);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a; b < m; ++b) {
        const auto prod = mult(basis[a], basis[b]);
        const auto cp = field_char_poly(rep(prod));
        const Fp coef = cp[dim - pi];
        pairing(a, b) = coef;
        pairing(b, a) = coef;
      }
    const auto kernel = null_space(pairing);
    std::vector<std::vector<Fp>> next;
    for (const auto& alpha : kernel) {
      std::vector<Fp> v(dim, zero);
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t i = 0; i < dim; ++i) v[i] = v[i] + alpha[a] * basis[a][i];
      next.push_back(std::move(v));
    }
    basis = std::move(next);
  }

  if (basis.empty()) return basis;
  Matrix<Fp> rows(basis.size(), dim, zero);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) rows(i, j) = basis[i][j];
  auto ech = reduced_row_echelon(std::move(rows));
  std::vector<std::vector<Fp>> out;
  for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i) {
    std::vector<Fp> v(dim, zero);
    for (std::size_t j = 0; j < dim; ++j) v[j] = ech.mat(i, j);
    out.push_back(std::move(v));
  }
  return out;
}

inline bool fp_matrix_nilpotent(const Matrix<Fp>& m) {
  const auto cp = field_char_poly(m);
  for (std::size_t i = 0; i + 1 < cp.size(); ++i)
    if (!(cp[i] == Fp(0, cp[i].modulus()))) return false;
  return true;
}

// Nilpotency of every basis element plus a radical-free quotient, both
// checked with the same machinery.
template <typename Mult>
void verify_fp_radical(std::size_t dim, std::uint32_t p, Mult mult,
                       const std::vector<std::vector<Fp>>& rad) {
  const Fp zero(0, p), one(1, p);
  const auto e = [&](std::size_t i) {
    std::vector<Fp> v(dim, zero);
    v[i] = one;
    return v;
  };
  auto rep = [&](const std::vector<Fp>& x) {
    Matrix<Fp> m = Matrix<Fp>::zero(dim, dim, zero);
    for (std::size_t j = 0; j < dim; ++j) {
      const auto col = mult(x, e(j));
      for (std::size_t i = 0; i < dim; ++i) m(i, j) = col[i];
    }
    return m;
  };
  for (const auto& v : rad)
    if (!fp_matrix_nilpotent(rep(v)))
      throw hypothesis_error("radical verification failed: non-nilpotent element");

  if (rad.empty()) return;
  Matrix<Fp> rows(rad.size(), dim, zero);
  for (std::size_t i = 0; i < rad.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) rows(i, j) = rad[i][j];
  const auto ech = reduced_row_echelon(std::move(rows));
  std::vector<bool> is_pivot(dim, false);
  for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> complement;
  for (std::size_t j = 0; j < dim; ++j)
    if (!is_pivot[j]) complement.push_back(j);

  // Reduce modulo the echelon basis, then read complement coordinates.
  auto project = [&](std::vector<Fp> v) {
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
      const Fp f = v[ech.pivot_cols[r]];
      if (f == zero) continue;
      for (std::size_t j = 0; j < dim; ++j) v[j] = v[j] - f * ech.mat(r, j);
    }
    std::vector<Fp> q(complement.size(), zero);
    for (std::size_t t = 0; t < complement.size(); ++t) q[t] = v[complement[t]];
    return q;
  };
  auto lift = [&](const std::vector<Fp>& q) {
    std::vector<Fp> v(dim, zero);
    for (std::size_t t = 0; t < complement.size(); ++t) v[complement[t]] = q[t];
    return v;
  };
  auto qmult = [&](const std::vector<Fp>& a, const std::vector<Fp>& b) {
    return project(mult(lift(a), lift(b)));
  };
  if (!fp_algebra_radical(complement.size(), p, qmult).empty())
    throw hypothesis_error("radical verification failed: quotient is not semisimple");
}

// General path: the iterated pairing algorithm on the group algebra itself.
template <typename T>
std::vector<GroupRingElement<T>> radical_basis_general(const GroupPtr& gp, const T& like) {
  static_assert(std::is_same_v<T, Fp>);
  const std::uint32_t p = like.modulus();
  const Group& g = *gp;
  auto mult = [&](const std::vector<Fp>& a, const std::vector<Fp>& b) {
    return convolve(GroupRingElement<Fp>(gp, a), GroupRingElement<Fp>(gp, b)).coeffs();
  };
  auto rad = fp_algebra_radical(g.order(), p, mult);
  verify_fp_radical(g.order(), p, mult, rad);
  std::vector<GroupRingElement<T>> out;
  for (auto& v : rad) out.emplace_back(gp, std::move(v));
  return out;
}

inline bool is_power_of(unsigned n, std::uint32_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace detail

// Basis of the Jacobson radical of the group algebra. Characteristic zero or
// coprime to |G| gives the zero ideal; p-groups give the augmentation ideal;
// the general case runs the iterated pairing algorithm and self-verifies.
template <typename T>
std::vector<GroupRingElement<T>> radical_basis_group_algebra(const GroupPtr& gp,
                                                             const T& like) {
  const std::uint32_t p = scalar_traits<T>::characteristic(like);
  if (p == 0 || gp->order() % p != 0) return {};
  if constexpr (std::is_same_v<T, Fp>) {
    if (detail::is_power_of(gp->order(), p)) {
      std::vector<GroupRingElement<T>> out;
      for (unsigned i = 1; i < gp->order(); ++i)
        out.push_back(GroupRingElement<T>::basis(gp, i, like) -
                      GroupRingElement<T>::one(gp, like));
      return out;
    }
    return detail::radical_basis_general(gp, like);
  } else {
    throw std::logic_error("modular characteristic over a non-modular scalar type");
  }
}

}  // namespace joinring
