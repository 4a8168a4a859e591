#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "group_ring.hpp"
#include "matrix.hpp"
#include "scalar.hpp"

namespace joinring {

// Block matrix with a G_i-circulant in diagonal slot i and the constant block
// a_ij * J in off-diagonal slot (i, j), stored compactly: one group ring
// element per diagonal block plus the d x d matrix of off-diagonal constants
// (zero on its diagonal).
template <typename T>
class JoinElement {
public:
  JoinElement(std::vector<GroupPtr> groups, std::vector<GroupRingElement<T>> blocks,
              Matrix<T> off)
      : groups_(std::move(groups)), blocks_(std::move(blocks)), off_(std::move(off)) {
    const std::size_t d = groups_.size();
    if (d == 0) throw input_error("join element needs at least one group");
    if (blocks_.size() != d) throw input_error("join element block count mismatch");
    for (std::size_t i = 0; i < d; ++i)
      if (!same_group(blocks_[i].group(), groups_[i]))
        throw input_error("join element block lives over the wrong group");
    if (off_.rows() != d || off_.cols() != d)
      throw input_error("join element off-diagonal matrix must be d x d");
    const T zero = scalar_zero(like());
    for (std::size_t i = 0; i < d; ++i)
      if (!(off_(i, i) == zero))
        throw input_error("join element off-diagonal matrix must vanish on its diagonal");
  }

  static JoinElement zero(const std::vector<GroupPtr>& groups, const T& like) {
    std::vector<GroupRingElement<T>> blocks;
    for (const auto& g : groups) blocks.push_back(GroupRingElement<T>::zero(g, like));
    return JoinElement(groups, std::move(blocks),
                       Matrix<T>::zero(groups.size(), groups.size(), like));
  }
  static JoinElement identity(const std::vector<GroupPtr>& groups, const T& like) {
    std::vector<GroupRingElement<T>> blocks;
    for (const auto& g : groups) blocks.push_back(GroupRingElement<T>::one(g, like));
    return JoinElement(groups, std::move(blocks),
                       Matrix<T>::zero(groups.size(), groups.size(), like));
  }

  std::size_t d() const { return groups_.size(); }
  const std::vector<GroupPtr>& groups() const { return groups_; }
  const GroupPtr& group(std::size_t i) const { return groups_[i]; }
  unsigned order(std::size_t i) const { return groups_[i]->order(); }
  const GroupRingElement<T>& block(std::size_t i) const { return blocks_[i]; }
  const Matrix<T>& off() const { return off_; }
  const T& off(std::size_t i, std::size_t j) const { return off_(i, j); }
  const T& like() const { return blocks_[0].like(); }

  unsigned total_order() const {
    unsigned n = 0;
    for (const auto& g : groups_) n += g->order();
    return n;
  }
  // Dimension of the join ring as a module: sum of group orders plus one slot
  // per ordered off-diagonal pair.
  std::size_t dimension() const { return total_order() + d() * d() - d(); }

  friend JoinElement operator+(const JoinElement& a, const JoinElement& b) {
    a.compatible(b);
    std::vector<GroupRingElement<T>> blocks;
    for (std::size_t i = 0; i < a.d(); ++i) blocks.push_back(a.blocks_[i] + b.blocks_[i]);
    return JoinElement(a.groups_, std::move(blocks), a.off_ + b.off_);
  }
  friend JoinElement operator-(const JoinElement& a, const JoinElement& b) {
    a.compatible(b);
    std::vector<GroupRingElement<T>> blocks;
    for (std::size_t i = 0; i < a.d(); ++i) blocks.push_back(a.blocks_[i] - b.blocks_[i]);
    return JoinElement(a.groups_, std::move(blocks), a.off_ - b.off_);
  }
  friend JoinElement operator*(const T& s, const JoinElement& a) {
    std::vector<GroupRingElement<T>> blocks;
    for (std::size_t i = 0; i < a.d(); ++i) blocks.push_back(s * a.blocks_[i]);
    return JoinElement(a.groups_, std::move(blocks), s * a.off_);
  }
  friend bool operator==(const JoinElement& a, const JoinElement& b) {
    if (a.d() != b.d()) return false;
    for (std::size_t i = 0; i < a.d(); ++i)
      if (!same_group(a.groups_[i], b.groups_[i]) || !(a.blocks_[i] == b.blocks_[i]))
        return false;
    return a.off_ == b.off_;
  }

  // Standard basis order: group elements of each block in listing order, then
  // off-diagonal slots row-major, diagonal skipped.
  std::vector<T> coordinates() const {
    std::vector<T> v;
    v.reserve(dimension());
    for (const auto& b : blocks_)
      for (std::size_t i = 0; i < b.size(); ++i) v.push_back(b[i]);
    for (std::size_t i = 0; i < d(); ++i)
      for (std::size_t j = 0; j < d(); ++j)
        if (i != j) v.push_back(off_(i, j));
    return v;
  }
  static JoinElement from_coordinates(const std::vector<GroupPtr>& groups, const T& like,
                                      const std::vector<T>& v) {
    std::size_t expect = groups.size() * groups.size() - groups.size();
    for (const auto& g : groups) expect += g->order();
    if (v.size() != expect) throw input_error("coordinate vector has the wrong length");
    std::size_t pos = 0;
    std::vector<GroupRingElement<T>> blocks;
    for (const auto& g : groups) {
      std::vector<T> c(v.begin() + pos, v.begin() + pos + g->order());
      pos += g->order();
      blocks.emplace_back(g, std::move(c));
    }
    Matrix<T> off = Matrix<T>::zero(groups.size(), groups.size(), like);
    for (std::size_t i = 0; i < groups.size(); ++i)
      for (std::size_t j = 0; j < groups.size(); ++j)
        if (i != j) off(i, j) = v[pos++];
    return JoinElement(groups, std::move(blocks), std::move(off));
  }

  void compatible(const JoinElement& b) const {
    if (d() != b.d()) throw input_error("join elements have different block counts");
    for (std::size_t i = 0; i < d(); ++i)
      if (!same_group(groups_[i], b.groups_[i]))
        throw input_error("join elements live over different groups");
  }

private:
  std::vector<GroupPtr> groups_;
  std::vector<GroupRingElement<T>> blocks_;
  Matrix<T> off_;
};

template <typename T>
std::vector<std::size_t> block_offsets(const JoinElement<T>& a) {
  std::vector<std::size_t> off(a.d() + 1, 0);
  for (std::size_t i = 0; i < a.d(); ++i) off[i + 1] = off[i] + a.order(i);
  return off;
}

template <typename T>
Matrix<T> expand(const JoinElement<T>& a) {
  const auto at = block_offsets(a);
  const std::size_t n = at.back();
  Matrix<T> m = Matrix<T>::zero(n, n, a.like());
  for (std::size_t i = 0; i < a.d(); ++i) {
    const Matrix<T> c = to_circulant(a.block(i));
    for (std::size_t r = 0; r < c.rows(); ++r)
      for (std::size_t s = 0; s < c.cols(); ++s) m(at[i] + r, at[i] + s) = c(r, s);
    for (std::size_t j = 0; j < a.d(); ++j) {
      if (i == j) continue;
      for (std::size_t r = 0; r < a.order(i); ++r)
        for (std::size_t s = 0; s < a.order(j); ++s) m(at[i] + r, at[j] + s) = a.off(i, j);
    }
  }
  return m;
}

// Reads the compact form back off a dense matrix; rejects anything whose
// diagonal blocks are not G_i-circulants or whose off blocks are not constant.
template <typename T>
JoinElement<T> recognize(const Matrix<T>& m, const std::vector<GroupPtr>& groups) {
  if (groups.empty()) throw input_error("join recognition needs at least one group");
  std::vector<std::size_t> at(groups.size() + 1, 0);
  for (std::size_t i = 0; i < groups.size(); ++i) at[i + 1] = at[i] + groups[i]->order();
  if (m.rows() != at.back() || m.cols() != at.back())
    throw input_error("matrix size does not match the group orders");
  const double tol = 1e-9 * std::max(1.0, matrix_scale(m));
  const T like = m.like();
  const T zero = scalar_zero(like);
  std::vector<GroupRingElement<T>> blocks;
  Matrix<T> off = Matrix<T>::zero(groups.size(), groups.size(), like);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const Matrix<T> diag = m.submatrix(at[i], at[i], groups[i]->order(), groups[i]->order());
    if (!is_g_circulant(diag, groups[i]))
      throw input_error("not a join matrix: diagonal block " + std::to_string(i + 1) +
                        " is not a G-circulant");
    std::vector<T> c(groups[i]->order(), zero);
    for (unsigned j = 0; j < groups[i]->order(); ++j) c[j] = diag(0, j);
    blocks.emplace_back(groups[i], std::move(c));
    for (std::size_t j = 0; j < groups.size(); ++j) {
      if (i == j) continue;
      const T& first = m(at[i], at[j]);
      for (std::size_t r = 0; r < groups[i]->order(); ++r)
        for (std::size_t s = 0; s < groups[j]->order(); ++s)
          if (!entries_equal(m(at[i] + r, at[j] + s), first, tol))
            throw input_error("not a join matrix: off-diagonal block (" +
                              std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              ") is not constant");
      off(i, j) = first;
    }
  }
  return JoinElement<T>(groups, std::move(blocks), std::move(off));
}

// Compact product: diagonal slot l picks up C_l D_l plus the all-ones
// multiple sum_j k_j a_lj b_jl; off slot (s,t) is
// a_st eps(D_t) + sum_{j != s,t} k_j a_sj b_jt + eps(C_s) b_st.
template <typename T>
JoinElement<T> join_mul(const JoinElement<T>& a, const JoinElement<T>& b) {
  a.compatible(b);
  const std::size_t d = a.d();
  const T like = a.like();
  const T zero = scalar_zero(like);
  std::vector<GroupRingElement<T>> blocks;
  for (std::size_t l = 0; l < d; ++l) {
    GroupRingElement<T> blk = convolve(a.block(l), b.block(l));
    T s = zero;
    for (std::size_t j = 0; j < d; ++j) {
      if (j == l) continue;
      s = s + scalar_from_int(like, b.order(j)) * a.off(l, j) * b.off(j, l);
    }
    if (!(s == zero)) blk = blk + s * GroupRingElement<T>::all_ones(a.group(l), like);
    blocks.push_back(std::move(blk));
  }
  Matrix<T> off = Matrix<T>::zero(d, d, like);
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t) {
      if (s == t) continue;
      T v = a.off(s, t) * augment(b.block(t)) + augment(a.block(s)) * b.off(s, t);
      for (std::size_t j = 0; j < d; ++j) {
        if (j == s || j == t) continue;
        v = v + scalar_from_int(like, a.order(j)) * a.off(s, j) * b.off(j, t);
      }
      off(s, t) = v;
    }
  return JoinElement<T>(a.groups(), std::move(blocks), std::move(off));
}

template <typename T>
JoinElement<T> operator*(const JoinElement<T>& a, const JoinElement<T>& b) {
  return join_mul(a, b);
}

// The d x d augmentation image: eps(C_i) on the diagonal, k_j a_ij off it.
template <typename T>
Matrix<T> augment_join(const JoinElement<T>& a) {
  const std::size_t d = a.d();
  const T like = a.like();
  Matrix<T> m = Matrix<T>::zero(d, d, like);
  for (std::size_t i = 0; i < d; ++i) {
    m(i, i) = augment(a.block(i));
    for (std::size_t j = 0; j < d; ++j)
      if (i != j) m(i, j) = scalar_from_int(like, a.order(j)) * a.off(i, j);
  }
  return m;
}

// Central elements have zero off part, central blocks, and equal block
// augmentations: the identity plus one augmentation-zero class sum per
// nontrivial conjugacy class.
template <typename T>
std::vector<JoinElement<T>> center_basis(const std::vector<GroupPtr>& groups, const T& like) {
  if (groups.empty()) throw input_error("center basis needs at least one group");
  std::vector<JoinElement<T>> out;
  out.push_back(JoinElement<T>::identity(groups, like));
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto& classes = groups[i]->conjugacy_classes();
    for (std::size_t c = 1; c < classes.size(); ++c) {
      std::vector<GroupRingElement<T>> blocks;
      for (std::size_t t = 0; t < groups.size(); ++t)
        blocks.push_back(GroupRingElement<T>::zero(groups[t], like));
      std::vector<T> coeff(groups[i]->order(), scalar_zero(like));
      for (unsigned g : classes[c]) coeff[g] = scalar_one(like);
      coeff[Group::identity()] =
          coeff[Group::identity()] - scalar_from_int(like, classes[c].size());
      blocks[i] = GroupRingElement<T>(groups[i], std::move(coeff));
      out.push_back(JoinElement<T>(groups, std::move(blocks),
                                   Matrix<T>::zero(groups.size(), groups.size(), like)));
    }
  }
  return out;
}

// Unit criterion: every diagonal block invertible or almost invertible, and
// the d x d augmentation image invertible.
template <typename T>
bool is_unit(const JoinElement<T>& a) {
  for (std::size_t i = 0; i < a.d(); ++i) {
    const auto di = det_inverse(to_circulant(a.block(i)));
    if (!di.inverse && !is_almost_invertible(a.block(i))) return false;
  }
  return det_inverse(augment_join(a)).inverse.has_value();
}

template <typename T>
std::optional<JoinElement<T>> join_inverse(const JoinElement<T>& a) {
  if (!is_unit(a)) return std::nullopt;
  const auto di = det_inverse(expand(a));
  if (!di.inverse) return std::nullopt;
  return recognize(*di.inverse, a.groups());
}

namespace detail {

template <typename T>
std::uint32_t modular_char(const JoinElement<T>& a) {
  const std::uint32_t p = scalar_traits<T>::characteristic(a.like());
  if (p == 0) return 0;
  for (std::size_t i = 0; i < a.d(); ++i)
    if (a.order(i) % p != 0) return 0;
  return p;
}

}  // namespace detail

// Factorization of a unit in the modular case (characteristic divides every
// group order): torus part eps(C_i), principal part C_i / eps(C_i) in U_1,
// and the off-diagonal log image.
template <typename T>
struct UnitGroupStructure {
  std::vector<T> torus;
  Matrix<T> offpart;
  std::vector<GroupRingElement<T>> principal;
};

template <typename T>
UnitGroupStructure<T> modular_unit_structure(const JoinElement<T>& a) {
  if (detail::modular_char(a) == 0)
    throw hypothesis_error(
        "unit factorization requires the characteristic to divide every group order");
  if (!is_unit(a)) throw hypothesis_error("unit factorization of a non-unit");
  const T like = a.like();
  const T one = scalar_one(like);
  UnitGroupStructure<T> s{{}, Matrix<T>::zero(a.d(), a.d(), like), {}};
  for (std::size_t i = 0; i < a.d(); ++i) {
    const T t = augment(a.block(i));
    if (t == scalar_zero(like))
      throw hypothesis_error("modular unit with vanishing block augmentation");
    const T tinv = scalar_div(one, t);
    s.torus.push_back(t);
    s.principal.push_back(tinv * a.block(i));
    for (std::size_t j = 0; j < a.d(); ++j)
      if (i != j) s.offpart(i, j) = tinv * a.off(i, j);
  }
  return s;
}

template <typename T>
JoinElement<T> reassemble_unit(const std::vector<GroupPtr>& groups,
                               const UnitGroupStructure<T>& s) {
  if (s.torus.size() != groups.size() || s.principal.size() != groups.size())
    throw input_error("unit structure has the wrong block count");
  const T like = s.torus[0];
  std::vector<GroupRingElement<T>> blocks;
  Matrix<T> off = Matrix<T>::zero(groups.size(), groups.size(), like);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    blocks.push_back(s.torus[i] * s.principal[i]);
    for (std::size_t j = 0; j < groups.size(); ++j)
      if (i != j) off(i, j) = s.torus[i] * s.offpart(i, j);
  }
  return JoinElement<T>(groups, std::move(blocks), std::move(off));
}

// The additive logarithm on U_1: a unit with all block augmentations 1 maps
// to its off-diagonal matrix.
template <typename T>
Matrix<T> u1_log(const JoinElement<T>& a) {
  if (detail::modular_char(a) == 0)
    throw hypothesis_error(
        "the unit logarithm requires the characteristic to divide every group order");
  const T one = scalar_one(a.like());
  for (std::size_t i = 0; i < a.d(); ++i)
    if (!(augment(a.block(i)) == one))
      throw hypothesis_error("unit logarithm outside U_1");
  return a.off();
}

// (p-1)^d p^{sum k_i + d^2 - 2d} over the prime field F_p with p-groups.
inline mpz_class count_units(const std::vector<GroupPtr>& groups, const FieldSpec& fs) {
  if (fs.kind != FieldSpec::Kind::prime)
    throw hypothesis_error("unit count requires a finite prime field");
  if (groups.empty()) throw input_error("unit count needs at least one group");
  const std::uint32_t p = fs.p;
  long sum = 0;
  for (const auto& g : groups) {
    if (!detail::is_power_of(g->order(), p))
      throw hypothesis_error("unit count requires every group to be a p-group for p = " +
                             std::to_string(p));
    sum += g->order();
  }
  const long d = static_cast<long>(groups.size());
  mpz_class count;
  mpz_ui_pow_ui(count.get_mpz_t(), p - 1, static_cast<unsigned long>(d));
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), p, static_cast<unsigned long>(sum + d * d - 2 * d));
  return count * power;
}

// Block-wise group algebra radicals, plus one off-diagonal slot for every
// ordered pair whose order product the characteristic divides.
template <typename T>
std::vector<JoinElement<T>> radical_basis_join(const std::vector<GroupPtr>& groups,
                                               const T& like) {
  if (groups.empty()) throw input_error("radical basis needs at least one group");
  const std::uint32_t p = scalar_traits<T>::characteristic(like);
  std::vector<JoinElement<T>> out;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (const auto& b : radical_basis_group_algebra(groups[i], like)) {
      std::vector<GroupRingElement<T>> blocks;
      for (std::size_t t = 0; t < groups.size(); ++t)
        blocks.push_back(t == i ? b : GroupRingElement<T>::zero(groups[t], like));
      out.push_back(JoinElement<T>(groups, std::move(blocks),
                                   Matrix<T>::zero(groups.size(), groups.size(), like)));
    }
  }
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = 0; j < groups.size(); ++j) {
      if (i == j || p == 0) continue;
      const std::uint64_t prod =
          static_cast<std::uint64_t>(groups[i]->order()) * groups[j]->order();
      if (prod % p != 0) continue;
      std::vector<GroupRingElement<T>> blocks;
      for (std::size_t t = 0; t < groups.size(); ++t)
        blocks.push_back(GroupRingElement<T>::zero(groups[t], like));
      Matrix<T> off = Matrix<T>::zero(groups.size(), groups.size(), like);
      off(i, j) = scalar_one(like);
      out.push_back(JoinElement<T>(groups, std::move(blocks), std::move(off)));
    }
  return out;
}

template <typename T>
bool is_semisimple(const std::vector<GroupPtr>& groups, const T& like) {
  const std::uint32_t p = scalar_traits<T>::characteristic(like);
  if (p == 0) return true;
  for (const auto& g : groups)
    if (g->order() % p == 0) return false;
  return true;
}

// Central idempotents cutting the ring into a d x d matrix factor and one
// augmentation-zero group algebra factor per block. Requires every group
// order invertible.
template <typename T>
struct SemisimpleDecomposition {
  std::vector<JoinElement<T>> idempotents;  // f_1, .., f_d, then the matrix slot
  std::size_t matrix_dim;                   // d*d
  std::vector<std::size_t> delta_dims;      // k_i - 1
};

template <typename T>
SemisimpleDecomposition<T> decompose_semisimple(const std::vector<GroupPtr>& groups,
                                                const T& like) {
  if (groups.empty()) throw input_error("decomposition needs at least one group");
  if (!is_semisimple(groups, like))
    throw hypothesis_error("decomposition requires every group order invertible");
  SemisimpleDecomposition<T> dec;
  std::vector<GroupRingElement<T>> averages;
  for (const auto& g : groups) averages.push_back(idempotent_eG(g, like));
  for (std::size_t i = 0; i < groups.size(); ++i) {
    std::vector<GroupRingElement<T>> blocks;
    for (std::size_t t = 0; t < groups.size(); ++t)
      blocks.push_back(t == i ? GroupRingElement<T>::one(groups[t], like) - averages[t]
                              : GroupRingElement<T>::zero(groups[t], like));
    dec.idempotents.push_back(JoinElement<T>(
        groups, std::move(blocks), Matrix<T>::zero(groups.size(), groups.size(), like)));
    dec.delta_dims.push_back(groups[i]->order() - 1);
  }
  dec.idempotents.push_back(JoinElement<T>(
      groups, averages, Matrix<T>::zero(groups.size(), groups.size(), like)));
  dec.matrix_dim = groups.size() * groups.size();
  return dec;
}

// Count of irreducible modules over an algebraically closed field of the
// given characteristic: p-regular class counts summed, minus one for each
// invertible-order group past the first, when any exists.
inline std::size_t irreducible_count(const std::vector<GroupPtr>& groups, std::uint32_t p,
                                     bool assume_algebraically_closed = true) {
  if (groups.empty()) throw input_error("irreducible count needs at least one group");
  if (!assume_algebraically_closed)
    throw hypothesis_error("irreducible count is only available over algebraically closed fields");
  if (p != 0 && !is_prime_u32(p))
    throw input_error("characteristic must be zero or a prime");
  std::size_t total = 0, invertible = 0;
  for (const auto& g : groups) {
    total += g->p_regular_class_count(p);
    if (p == 0 || g->order() % p != 0) ++invertible;
  }
  return invertible >= 1 ? total - invertible + 1 : total;
}

// Frobenius test: d = 1 always passes; otherwise all group orders must be
// invertible. The witness row is the first block whose order vanishes.
struct FrobeniusCheck {
  bool frobenius = false;
  std::optional<std::size_t> witness_row;
};

template <typename T>
FrobeniusCheck frobenius_check(const std::vector<GroupPtr>& groups, const T& like) {
  if (groups.empty()) throw input_error("Frobenius check needs at least one group");
  if (groups.size() == 1) return {true, std::nullopt};
  const std::uint32_t p = scalar_traits<T>::characteristic(like);
  if (p == 0) return {true, std::nullopt};
  for (std::size_t i = 0; i < groups.size(); ++i)
    if (groups[i]->order() % p == 0) return {false, i};
  return {true, std::nullopt};
}

// The element whose block row `row` is a_row * J on the diagonal slot and
// a_j * J on slot (row, j); all other slots vanish. Left multiplication by
// any join element scales it by the augmentation of block `row`.
template <typename T>
JoinElement<T> frobenius_witness(const std::vector<GroupPtr>& groups, const T& like,
                                 std::size_t row, const std::vector<T>& a) {
  if (row >= groups.size()) throw input_error("witness row out of range");
  if (a.size() != groups.size()) throw input_error("witness coefficient count mismatch");
  std::vector<GroupRingElement<T>> blocks;
  for (std::size_t t = 0; t < groups.size(); ++t)
    blocks.push_back(t == row ? a[row] * GroupRingElement<T>::all_ones(groups[t], like)
                              : GroupRingElement<T>::zero(groups[t], like));
  Matrix<T> off = Matrix<T>::zero(groups.size(), groups.size(), like);
  for (std::size_t j = 0; j < groups.size(); ++j)
    if (j != row) off(row, j) = a[j];
  return JoinElement<T>(groups, std::move(blocks), std::move(off));
}

// Nonzero coefficients a with lambda(witness(a)) = 0, for a functional given
// over the standard basis.
template <typename T>
std::vector<T> frobenius_kernel(const std::vector<GroupPtr>& groups, const T& like,
                                std::size_t row, const std::vector<T>& lambda) {
  const std::size_t d = groups.size();
  if (d < 2) throw hypothesis_error("witness construction needs at least two blocks");
  if (row >= d) throw input_error("witness row out of range");
  std::size_t expect = d * d - d;
  std::vector<std::size_t> at(d + 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    at[i + 1] = at[i] + groups[i]->order();
    expect += groups[i]->order();
  }
  if (lambda.size() != expect) throw input_error("functional has the wrong length");

  const T zero = scalar_zero(like);
  std::vector<T> w(d, zero);
  for (std::size_t g = 0; g < groups[row]->order(); ++g) w[row] = w[row] + lambda[at[row] + g];
  std::size_t slot = at[d];
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j) continue;
      if (i == row) w[j] = lambda[slot];
      ++slot;
    }

  std::vector<T> a(d, zero);
  for (std::size_t j = 0; j < d; ++j)
    if (w[j] == zero) {
      a[j] = scalar_one(like);
      return a;
    }
  a[0] = w[1];
  a[1] = -w[0];
  return a;
}

}  // namespace joinring
