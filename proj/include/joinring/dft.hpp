#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "join.hpp"
#include "matrix.hpp"

namespace joinring {

// Entry (j, l) = omega^{jl} with omega = exp(2 pi i / n); normalized divides
// by sqrt(n) and is unitary.
inline Matrix<Cplx> dft_matrix(unsigned n, bool normalized = false) {
  if (n == 0) throw input_error("DFT size must be positive");
  Matrix<Cplx> f = Matrix<Cplx>::zero(n, n, Cplx(0.0, 0.0));
  const double scale = normalized ? 1.0 / std::sqrt(static_cast<double>(n)) : 1.0;
  for (unsigned j = 0; j < n; ++j)
    for (unsigned l = 0; l < n; ++l) {
      const double arg = 2.0 * std::numbers::pi * ((j * static_cast<std::uint64_t>(l)) % n) /
                         static_cast<double>(n);
      f(j, l) = scale * Cplx(std::cos(arg), std::sin(arg));
    }
  return f;
}

inline Matrix<Cplx> dft_inverse(unsigned n, bool normalized = false) {
  Matrix<Cplx> f = dft_matrix(n, normalized);
  const double scale = normalized ? 1.0 : 1.0 / static_cast<double>(n);
  Matrix<Cplx> inv = Matrix<Cplx>::zero(n, n, Cplx(0.0, 0.0));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) inv(i, j) = scale * std::conj(f(j, i));
  return inv;
}

namespace detail {

inline Matrix<Cplx> block_diag(const std::vector<Matrix<Cplx>>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  Matrix<Cplx> m = Matrix<Cplx>::zero(n, n, Cplx(0.0, 0.0));
  std::size_t at = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(at + i, at + j) = b(i, j);
    at += b.rows();
  }
  return m;
}

}  // namespace detail

inline Matrix<Cplx> join_dft(const std::vector<unsigned>& orders, bool normalized = false) {
  if (orders.empty()) throw input_error("join DFT needs at least one order");
  std::vector<Matrix<Cplx>> blocks;
  for (unsigned k : orders) blocks.push_back(dft_matrix(k, normalized));
  return detail::block_diag(blocks);
}

inline Matrix<Cplx> join_dft_inverse(const std::vector<unsigned>& orders,
                                     bool normalized = false) {
  if (orders.empty()) throw input_error("join DFT needs at least one order");
  std::vector<Matrix<Cplx>> blocks;
  for (unsigned k : orders) blocks.push_back(dft_inverse(k, normalized));
  return detail::block_diag(blocks);
}

// New-to-old column order moving the zero-frequency column of every block to
// the tail, preserving relative order within the good and bad columns.
inline std::vector<std::size_t> bad_column_permutation(const std::vector<unsigned>& orders) {
  if (orders.empty()) throw input_error("column permutation needs at least one order");
  std::vector<std::size_t> good, bad;
  std::size_t at = 0;
  for (unsigned k : orders) {
    if (k == 0) throw input_error("group order must be positive");
    bad.push_back(at);
    for (std::size_t j = 1; j < k; ++j) good.push_back(at + j);
    at += k;
  }
  good.insert(good.end(), bad.begin(), bad.end());
  return good;
}

inline Matrix<Cplx> permutation_matrix(const std::vector<std::size_t>& new_to_old) {
  const std::size_t n = new_to_old.size();
  Matrix<Cplx> p = Matrix<Cplx>::zero(n, n, Cplx(0.0, 0.0));
  for (std::size_t t = 0; t < n; ++t) p(new_to_old[t], t) = Cplx(1.0, 0.0);
  return p;
}

struct Diagonalization {
  std::vector<Cplx> circulant_eigs;  // good-frequency eigenvalues, block order
  Matrix<Cplx> reduced;              // trailing d x d block
  double residual = 0.0;             // largest stray off-structure magnitude
  Matrix<Cplx> conjugator;           // F P, so that (F P)^{-1} A (F P) splits
};

namespace detail {

template <typename T>
std::vector<unsigned> cyclic_orders(const JoinElement<T>& a) {
  std::vector<unsigned> orders;
  for (std::size_t i = 0; i < a.d(); ++i) {
    const Group& g = *a.group(i);
    if (!(g == Group::cyclic(g.order())))
      throw hypothesis_error("diagonalization requires cyclic groups in the power listing");
    orders.push_back(g.order());
  }
  return orders;
}

}  // namespace detail

// Conjugates the expansion by the block DFT and the bad-column permutation:
// the result splits as diag(good eigenvalues) plus a trailing d x d block.
inline Diagonalization diagonalize(const JoinElement<Cplx>& a, bool normalized = false) {
  const std::vector<unsigned> orders = detail::cyclic_orders(a);
  const std::size_t d = orders.size();
  const Matrix<Cplx> dense = expand(a);
  const std::size_t n = dense.rows();
  const Matrix<Cplx> f = join_dft(orders, normalized);
  const Matrix<Cplx> finv = join_dft_inverse(orders, normalized);
  const Matrix<Cplx> conj = finv * dense * f;
  const auto perm = bad_column_permutation(orders);
  Matrix<Cplx> b = Matrix<Cplx>::zero(n, n, Cplx(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = conj(perm[i], perm[j]);

  const std::size_t head = n - d;
  double residual = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool structural = (i < head && i == j) || (i >= head && j >= head);
      if (!structural) residual = std::max(residual, std::abs(b(i, j)));
    }
  const double tol = 1e-9 * std::max(1.0, matrix_scale(dense));
  if (residual > tol)
    throw numeric_error("diagonalization residual exceeds tolerance");

  Diagonalization out;
  out.residual = residual;
  for (std::size_t i = 0; i < head; ++i) out.circulant_eigs.push_back(b(i, i));
  out.reduced = b.submatrix(head, head, d, d);
  out.conjugator = f * permutation_matrix(perm);
  return out;
}

// The two Wedderburn coordinates: the good-frequency scalars and the d x d
// block, which is the augmentation image in the unnormalized convention.
struct WedderburnImage {
  std::vector<Cplx> scalars;
  Matrix<Cplx> reduced;
};

inline WedderburnImage wedderburn_map(const JoinElement<Cplx>& a) {
  Diagonalization dg = diagonalize(a, false);
  return {std::move(dg.circulant_eigs), std::move(dg.reduced)};
}

// Inverse of the map: block i recovers its circulant from the eigenvalue
// vector (M_ii, scalars of block i) by inverse DFT; off slot (i, j) divides
// M_ij by k_j.
inline JoinElement<Cplx> wedderburn_preimage(const std::vector<Cplx>& scalars,
                                             const Matrix<Cplx>& reduced,
                                             const std::vector<unsigned>& orders) {
  const std::size_t d = orders.size();
  if (d == 0) throw input_error("preimage needs at least one order");
  if (reduced.rows() != d || reduced.cols() != d)
    throw input_error("reduced block must be d x d");
  std::size_t good = 0;
  for (unsigned k : orders) {
    if (k == 0) throw input_error("group order must be positive");
    good += k - 1;
  }
  if (scalars.size() != good) throw input_error("scalar count does not match the orders");

  std::vector<GroupPtr> groups;
  std::vector<GroupRingElement<Cplx>> blocks;
  std::size_t at = 0;
  for (std::size_t i = 0; i < d; ++i) {
    const unsigned k = orders[i];
    groups.push_back(share(Group::cyclic(k)));
    std::vector<Cplx> vals(k);
    vals[0] = reduced(i, i);
    for (unsigned f = 1; f < k; ++f) vals[f] = scalars[at + f - 1];
    at += k - 1;
    std::vector<Cplx> coeff(k, Cplx(0.0, 0.0));
    for (unsigned m = 0; m < k; ++m) {
      Cplx s(0.0, 0.0);
      for (unsigned f = 0; f < k; ++f) {
        const double arg = -2.0 * std::numbers::pi *
                           ((static_cast<std::uint64_t>(f) * m) % k) / static_cast<double>(k);
        s += vals[f] * Cplx(std::cos(arg), std::sin(arg));
      }
      coeff[m] = s / static_cast<double>(k);
    }
    blocks.emplace_back(groups.back(), std::move(coeff));
  }
  Matrix<Cplx> off = Matrix<Cplx>::zero(d, d, Cplx(0.0, 0.0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (i != j) off(i, j) = reduced(i, j) / static_cast<double>(orders[j]);
  return JoinElement<Cplx>(groups, std::move(blocks), std::move(off));
}

// DFT evaluations of block i at its nonzero frequencies, in block order; the
// structured eigenvalues of the join.
inline std::vector<Cplx> circulant_eigenvalues(const JoinElement<Cplx>& a) {
  const std::vector<unsigned> orders = detail::cyclic_orders(a);
  std::vector<Cplx> out;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    const unsigned k = orders[i];
    for (unsigned f = 1; f < k; ++f) {
      Cplx s(0.0, 0.0);
      for (unsigned m = 0; m < k; ++m) {
        const double arg = 2.0 * std::numbers::pi *
                           ((static_cast<std::uint64_t>(f) * m) % k) / static_cast<double>(k);
        s += a.block(i)[m] * Cplx(std::cos(arg), std::sin(arg));
      }
      out.push_back(s);
    }
  }
  return out;
}

// Full spectrum of the join: structured circulant eigenvalues plus the
// eigenvalues of the reduced block.
inline std::vector<Cplx> join_spectrum(const JoinElement<Cplx>& a) {
  Diagonalization dg = diagonalize(a, false);
  std::vector<Cplx> out = std::move(dg.circulant_eigs);
  for (const Cplx& z : complex_eigenvalues(dg.reduced)) out.push_back(z);
  return out;
}

}  // namespace joinring
