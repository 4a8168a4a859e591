#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"

namespace joinring {

// Finite group of order <= 120 given by its Cayley table. Element 0 is the
// identity. Fixed listings: cyclic groups list powers of the generator,
// dihedral groups list r^0..r^{n-1}, s, sr, .., sr^{n-1}, symmetric groups
// list permutations lexicographically, products list pairs lexicographically.
class Group {
public:
  static constexpr unsigned max_order = 120;

  static Group cyclic(unsigned n) {
    require(n >= 1 && n <= max_order, "cyclic group order must be in 1..120");
    std::vector<unsigned> t(n * n);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) t[i * n + j] = (i + j) % n;
    return Group(std::move(t), n, "cyclic", n);
  }

  // order = 2n: rotations r^i at 0..n-1, reflections s r^i at n..2n-1,
  // with s r s = r^{-1}.
  static Group dihedral(unsigned order) {
    require(order >= 2 && order % 2 == 0 && order <= max_order,
            "dihedral group order must be even, in 2..120");
    const unsigned n = order / 2;
    std::vector<unsigned> t(order * order);
    auto idx = [n](bool flip, unsigned rot) { return (flip ? n : 0) + rot % n; };
    for (unsigned i = 0; i < order; ++i)
      for (unsigned j = 0; j < order; ++j) {
        const bool fi = i >= n, fj = j >= n;
        const unsigned ri = i % n, rj = j % n;
        // (s^a r^ri)(s^b r^rj) = s^(a+b) r^(rj +- ri)
        const unsigned rot = fj ? (rj + n - ri % n) % n : (ri + rj) % n;
        t[i * order + j] = idx(fi != fj, rot);
      }
    return Group(std::move(t), order, "dihedral", order);
  }

  static Group symmetric(unsigned m) {
    require(m >= 1 && m <= 5, "symmetric group degree must be in 1..5");
    std::vector<std::vector<unsigned>> perms;
    std::vector<unsigned> p(m);
    std::iota(p.begin(), p.end(), 0u);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const unsigned n = static_cast<unsigned>(perms.size());
    auto find = [&](const std::vector<unsigned>& q) {
      return static_cast<unsigned>(std::lower_bound(perms.begin(), perms.end(), q) -
                                   perms.begin());
    };
    std::vector<unsigned> t(n * n);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) {
        std::vector<unsigned> c(m);
        for (unsigned x = 0; x < m; ++x) c[x] = perms[i][perms[j][x]];
        t[i * n + j] = find(c);
      }
    return Group(std::move(t), n, "symmetric", m);
  }

  static Group product(const Group& a, const Group& b) {
    const unsigned n = a.order() * b.order();
    require(n <= max_order, "product group order exceeds 120");
    std::vector<unsigned> t(static_cast<std::size_t>(n) * n);
    const unsigned nb = b.order();
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j)
        t[static_cast<std::size_t>(i) * n + j] =
            a.mul(i / nb, j / nb) * nb + b.mul(i % nb, j % nb);
    return Group(std::move(t), n, "cayley", n);
  }

  static Group from_table(const std::vector<std::vector<unsigned>>& table) {
    const std::size_t n = table.size();
    require(n >= 1 && n <= max_order, "Cayley table order must be in 1..120");
    std::vector<unsigned> t;
    t.reserve(n * n);
    for (const auto& row : table) {
      if (row.size() != n) throw input_error("Cayley table is not square");
      for (unsigned x : row) {
        if (x >= n) throw input_error("Cayley table entry out of range");
        t.push_back(x);
      }
    }
    return Group(std::move(t), static_cast<unsigned>(n), "cayley", static_cast<unsigned>(n));
  }

  unsigned order() const { return n_; }
  unsigned mul(unsigned i, unsigned j) const { return table_[i * n_ + j]; }
  unsigned inv(unsigned i) const { return inv_[i]; }
  static constexpr unsigned identity() { return 0; }

  unsigned element_order(unsigned i) const {
    unsigned x = i, k = 1;
    while (x != 0) {
      x = mul(x, i);
      ++k;
    }
    return k;
  }

  bool is_abelian() const {
    for (unsigned i = 0; i < n_; ++i)
      for (unsigned j = i + 1; j < n_; ++j)
        if (mul(i, j) != mul(j, i)) return false;
    return true;
  }

  // Classes ordered by least member; members sorted ascending.
  const std::vector<std::vector<unsigned>>& conjugacy_classes() const { return classes_; }
  std::size_t class_count() const { return classes_.size(); }

  // Classes whose elements have order coprime to p; p = 0 counts all classes.
  std::size_t p_regular_class_count(std::uint32_t p) const {
    if (p == 0) return classes_.size();
    std::size_t c = 0;
    for (const auto& cl : classes_)
      if (element_order(cl[0]) % p != 0) ++c;
    return c;
  }

  Group opposite() const {
    std::vector<unsigned> t(table_.size());
    for (unsigned i = 0; i < n_; ++i)
      for (unsigned j = 0; j < n_; ++j) t[i * n_ + j] = table_[j * n_ + i];
    return Group(std::move(t), n_, "cayley", n_);
  }

  const std::string& kind() const { return kind_; }
  unsigned param() const { return param_; }

  const std::vector<unsigned>& flat_table() const { return table_; }

  friend bool operator==(const Group& a, const Group& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }
  friend bool operator!=(const Group& a, const Group& b) { return !(a == b); }

private:
  Group(std::vector<unsigned> table, unsigned n, std::string kind, unsigned param)
      : table_(std::move(table)), n_(n), kind_(std::move(kind)), param_(param) {
    validate();
    inv_.resize(n_);
    for (unsigned i = 0; i < n_; ++i)
      for (unsigned j = 0; j < n_; ++j)
        if (mul(i, j) == 0) inv_[i] = j;
    compute_classes();
  }

  static void require(bool ok, const char* msg) {
    if (!ok) throw input_error(msg);
  }

  void validate() const {
    for (unsigned i = 0; i < n_; ++i)
      if (mul(0, i) != i || mul(i, 0) != i)
        throw input_error("identity is not at index 0");
    std::vector<bool> seen(n_);
    for (unsigned i = 0; i < n_; ++i) {
      std::fill(seen.begin(), seen.end(), false);
      for (unsigned j = 0; j < n_; ++j) seen[mul(i, j)] = true;
      if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw input_error("Cayley table rows are not permutations");
      std::fill(seen.begin(), seen.end(), false);
      for (unsigned j = 0; j < n_; ++j) seen[mul(j, i)] = true;
      if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw input_error("Cayley table columns are not permutations");
    }
    for (unsigned i = 0; i < n_; ++i)
      for (unsigned j = 0; j < n_; ++j)
        for (unsigned k = 0; k < n_; ++k)
          if (mul(mul(i, j), k) != mul(i, mul(j, k)))
            throw input_error("Cayley table is not associative");
  }

  void compute_classes() {
    std::vector<bool> assigned(n_, false);
    for (unsigned i = 0; i < n_; ++i) {
      if (assigned[i]) continue;
      std::vector<unsigned> cl;
      for (unsigned x = 0; x < n_; ++x) {
        const unsigned c = mul(mul(x, i), inv_[x]);
        if (!assigned[c]) {
          assigned[c] = true;
          cl.push_back(c);
        }
      }
      std::sort(cl.begin(), cl.end());
      classes_.push_back(std::move(cl));
    }
  }

  std::vector<unsigned> table_;
  unsigned n_;
  std::string kind_;
  unsigned param_;
  std::vector<unsigned> inv_;
  std::vector<std::vector<unsigned>> classes_;
};

using GroupPtr = std::shared_ptr<const Group>;

inline GroupPtr share(Group g) { return std::make_shared<const Group>(std::move(g)); }

inline bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace joinring
