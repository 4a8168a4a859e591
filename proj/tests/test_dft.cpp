#include <catch2/catch_amalgamated.hpp>

#include <joinring/dft.hpp>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <random>

using namespace joinring;

namespace {

std::vector<GroupPtr> zgroups(const std::vector<unsigned>& orders) {
  std::vector<GroupPtr> gs;
  for (unsigned n : orders) gs.push_back(share(Group::cyclic(n)));
  return gs;
}

JoinElement<Cplx> random_cjoin(const std::vector<GroupPtr>& gs, std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(-3, 3);
  const Cplx c0(0, 0);
  const std::size_t dim = JoinElement<Cplx>::zero(gs, c0).dimension();
  std::vector<Cplx> v;
  for (std::size_t i = 0; i < dim; ++i) v.emplace_back(coin(rng), coin(rng));
  return JoinElement<Cplx>::from_coordinates(gs, c0, v);
}

std::vector<Cplx> sorted_by_re_im(std::vector<Cplx> v) {
  std::sort(v.begin(), v.end(), [](const Cplx& a, const Cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return v;
}

double max_abs_diff(const std::vector<Cplx>& a, const std::vector<Cplx>& b) {
  REQUIRE(a.size() == b.size());
  double mx = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) mx = std::max(mx, std::abs(a[i] - b[i]));
  return mx;
}

// The two-weight join with zero diagonal blocks and unit off weights is the
// complete bipartite graph; triangles joined by unit weights give K6.
JoinElement<Cplx> graph_join(const std::vector<unsigned>& orders,
                             const std::vector<std::vector<long>>& first_rows, double w) {
  const Cplx c0(0, 0);
  const auto gs = zgroups(orders);
  std::vector<GroupRingElement<Cplx>> blocks;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    std::vector<Cplx> c;
    for (long x : first_rows[i]) c.emplace_back(static_cast<double>(x), 0.0);
    blocks.emplace_back(gs[i], std::move(c));
  }
  Matrix<Cplx> off(orders.size(), orders.size(), Cplx(w, 0));
  for (std::size_t i = 0; i < orders.size(); ++i) off(i, i) = c0;
  return JoinElement<Cplx>(gs, std::move(blocks), std::move(off));
}

}  // namespace

TEST_CASE("fourier matrices invert, and the normalized one is unitary") {
  for (unsigned n : {1u, 4u, 5u}) {
    const auto f = dft_matrix(n);
    const auto fi = dft_inverse(n);
    CHECK(matrices_agree(f * fi, Matrix<Cplx>::identity(n, Cplx(0, 0))));
    const auto u = dft_matrix(n, true);
    Matrix<Cplx> uh = u.transpose();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) uh(i, j) = std::conj(uh(i, j));
    CHECK(matrices_agree(u * uh, Matrix<Cplx>::identity(n, Cplx(0, 0))));
  }
  const auto big = join_dft({2, 3});
  const auto biginv = join_dft_inverse({2, 3});
  CHECK(matrices_agree(big * biginv, Matrix<Cplx>::identity(5, Cplx(0, 0))));
}

TEST_CASE("augmentation columns sort to the back") {
  CHECK(bad_column_permutation({2, 3}) == std::vector<std::size_t>{1, 3, 4, 0, 2});
  CHECK(bad_column_permutation({3}) == std::vector<std::size_t>{1, 2, 0});
  const auto perm = bad_column_permutation({2, 3});
  const auto p = permutation_matrix(perm);
  for (std::size_t t = 0; t < perm.size(); ++t) CHECK(p(perm[t], t) == Cplx(1, 0));
}

TEST_CASE("complete bipartite graph splits in closed form") {
  const auto a = graph_join({2, 3}, {{0, 0}, {0, 0, 0}}, 1.0);
  const auto dg = diagonalize(a);
  CHECK(dg.residual < 1e-9);
  REQUIRE(dg.circulant_eigs.size() == 3);
  for (const Cplx& z : dg.circulant_eigs) CHECK(std::abs(z) < 1e-9);
  REQUIRE(dg.reduced.rows() == 2);
  CHECK(std::abs(dg.reduced(0, 1) - Cplx(3, 0)) < 1e-9);
  CHECK(std::abs(dg.reduced(1, 0) - Cplx(2, 0)) < 1e-9);
  CHECK(std::abs(dg.reduced(0, 0)) < 1e-9);
  CHECK(std::abs(dg.reduced(1, 1)) < 1e-9);

  const auto spec = sorted_by_re_im(join_spectrum(a));
  const double r6 = std::sqrt(6.0);
  REQUIRE(spec.size() == 5);
  CHECK(std::abs(spec[0] - Cplx(-r6, 0)) < 1e-7);
  CHECK(std::abs(spec[4] - Cplx(r6, 0)) < 1e-7);
  for (int i = 1; i <= 3; ++i) CHECK(std::abs(spec[i]) < 1e-7);
}

TEST_CASE("two joined triangles rebuild the complete graph spectrum") {
  const auto a = graph_join({3, 3}, {{0, 1, 1}, {0, 1, 1}}, 1.0);
  const auto dg = diagonalize(a);
  REQUIRE(dg.circulant_eigs.size() == 4);
  for (const Cplx& z : dg.circulant_eigs) CHECK(std::abs(z - Cplx(-1, 0)) < 1e-9);
  CHECK(std::abs(dg.reduced(0, 0) - Cplx(2, 0)) < 1e-9);
  CHECK(std::abs(dg.reduced(0, 1) - Cplx(3, 0)) < 1e-9);
  CHECK(std::abs(dg.reduced(1, 0) - Cplx(3, 0)) < 1e-9);
  CHECK(std::abs(dg.reduced(1, 1) - Cplx(2, 0)) < 1e-9);

  // Eigenvalues 5 and -1^5, exactly the complete graph on six vertices.
  const auto spec = sorted_by_re_im(join_spectrum(a));
  REQUIRE(spec.size() == 6);
  for (int i = 0; i < 5; ++i) CHECK(std::abs(spec[i] - Cplx(-1, 0)) < 1e-7);
  CHECK(std::abs(spec[5] - Cplx(5, 0)) < 1e-7);
}

TEST_CASE("diagonalization splits random joins with structured pieces") {
  std::mt19937 rng(61);
  for (const auto& orders :
       std::vector<std::vector<unsigned>>{{2, 3}, {3, 3}, {4, 5}, {2, 2, 3}}) {
    const auto gs = zgroups(orders);
    const auto a = random_cjoin(gs, rng);
    const auto dg = diagonalize(a);
    // Head diagonal = direct transform evaluations at the good frequencies.
    CHECK(max_abs_diff(dg.circulant_eigs, circulant_eigenvalues(a)) < 1e-9 * 20);
    // Trailing block = the augmentation image.
    Matrix<Cplx> eps = augment_join(a);
    CHECK(matrices_agree(dg.reduced, eps));
    // Similarity against the assembled structured matrix, without inverting.
    const std::size_t n = expand(a).rows();
    const std::size_t head = n - orders.size();
    Matrix<Cplx> structured = Matrix<Cplx>::zero(n, n, Cplx(0, 0));
    for (std::size_t i = 0; i < head; ++i) structured(i, i) = dg.circulant_eigs[i];
    for (std::size_t i = 0; i < orders.size(); ++i)
      for (std::size_t j = 0; j < orders.size(); ++j)
        structured(head + i, head + j) = dg.reduced(i, j);
    CHECK(matrices_agree(expand(a) * dg.conjugator, dg.conjugator * structured));
  }
}

TEST_CASE("the split spectrum matches a dense eigensolver") {
  std::mt19937 rng(67);
  for (const auto& orders :
       std::vector<std::vector<unsigned>>{{2, 3}, {3, 3}, {4, 5}, {2, 2, 3}}) {
    const auto a = random_cjoin(zgroups(orders), rng);
    const auto mine = sorted_by_re_im(join_spectrum(a));
    const auto dense = expand(a);
    Eigen::MatrixXcd em(dense.rows(), dense.cols());
    for (std::size_t i = 0; i < dense.rows(); ++i)
      for (std::size_t j = 0; j < dense.cols(); ++j)
        em(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = dense(i, j);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(em, false);
    std::vector<Cplx> ref(dense.rows());
    for (std::size_t i = 0; i < dense.rows(); ++i)
      ref[i] = es.eigenvalues()(static_cast<Eigen::Index>(i));
    double scale = 1.0;
    for (const Cplx& z : ref) scale = std::max(scale, std::abs(z));
    CHECK(max_abs_diff(mine, sorted_by_re_im(ref)) < 1e-7 * scale);
  }
}

TEST_CASE("the normalized transform symmetrizes the reduced block") {
  std::mt19937 rng(71);
  const auto gs = zgroups({2, 3});
  const auto a = random_cjoin(gs, rng);
  const auto plain = diagonalize(a, false);
  const auto norm = diagonalize(a, true);
  const double rk[2] = {std::sqrt(2.0), std::sqrt(3.0)};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const Cplx expected =
          i == j ? augment(a.block(i)) : a.off(i, j) * Cplx(rk[i] * rk[j], 0);
      CHECK(std::abs(norm.reduced(i, j) - expected) < 1e-9 * 20);
    }
  // Diagonal rescaling is a similarity: both blocks carry the same spectrum.
  const auto e1 = sorted_by_re_im(complex_eigenvalues(plain.reduced));
  const auto e2 = sorted_by_re_im(complex_eigenvalues(norm.reduced));
  CHECK(max_abs_diff(e1, e2) < 1e-7 * 20);
  CHECK(max_abs_diff(plain.circulant_eigs, norm.circulant_eigs) < 1e-9 * 20);
}

TEST_CASE("the reduced coordinates respect multiplication") {
  std::mt19937 rng(73);
  for (const auto& orders : std::vector<std::vector<unsigned>>{{2, 3}, {3, 3}}) {
    const auto gs = zgroups(orders);
    for (int t = 0; t < 6; ++t) {
      const auto a = random_cjoin(gs, rng);
      const auto b = random_cjoin(gs, rng);
      const auto fa = wedderburn_map(a);
      const auto fb = wedderburn_map(b);
      const auto fab = wedderburn_map(join_mul(a, b));
      std::vector<Cplx> pointwise(fa.scalars.size());
      for (std::size_t i = 0; i < pointwise.size(); ++i)
        pointwise[i] = fa.scalars[i] * fb.scalars[i];
      CHECK(max_abs_diff(fab.scalars, pointwise) < 1e-7 * 100);
      CHECK(matrices_agree(fab.reduced, fa.reduced * fb.reduced));
    }
  }
}

TEST_CASE("the reduced coordinates invert back to the join element") {
  std::mt19937 rng(79);
  const std::vector<unsigned> orders{3, 4};
  const auto gs = zgroups(orders);
  const auto a = random_cjoin(gs, rng);
  const auto image = wedderburn_map(a);
  const auto back = wedderburn_preimage(image.scalars, image.reduced, orders);
  CHECK(matrices_agree(expand(back), expand(a)));

  // The other direction: arbitrary coordinates round-trip through the ring.
  std::uniform_int_distribution<int> coin(-3, 3);
  std::vector<Cplx> scalars;
  for (int i = 0; i < 5; ++i) scalars.emplace_back(coin(rng), coin(rng));
  Matrix<Cplx> reduced(2, 2, Cplx(0, 0));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) reduced(i, j) = Cplx(coin(rng), coin(rng));
  const auto element = wedderburn_preimage(scalars, reduced, orders);
  const auto reimage = wedderburn_map(element);
  CHECK(max_abs_diff(reimage.scalars, scalars) < 1e-9 * 20);
  CHECK(matrices_agree(reimage.reduced, reduced));

  CHECK_THROWS_AS(wedderburn_preimage(scalars, reduced, {2, 3}), input_error);
  CHECK_THROWS_AS(wedderburn_preimage(scalars, Matrix<Cplx>::zero(3, 3, Cplx(0, 0)), orders),
                  input_error);
}

TEST_CASE("diagonalization requires groups listed as powers of one generator") {
  const Cplx c0(0, 0);
  const auto s3 = share(Group::symmetric(3));
  CHECK_THROWS_AS(diagonalize(JoinElement<Cplx>::identity({s3}, c0)), hypothesis_error);
  // Abstractly cyclic but listed pairwise: the table is not the power listing.
  const auto prod = share(Group::product(Group::cyclic(2), Group::cyclic(3)));
  CHECK_THROWS_AS(diagonalize(JoinElement<Cplx>::identity({prod}, c0)), hypothesis_error);
}

TEST_CASE("one block reduces to the classical circulant transform") {
  const Cplx c0(0, 0);
  const auto z4 = share(Group::cyclic(4));
  std::vector<Cplx> c{Cplx(1, 0), Cplx(2, 0), Cplx(0, 0), Cplx(-1, 0)};
  const JoinElement<Cplx> a({z4}, {GroupRingElement<Cplx>(z4, c)},
                            Matrix<Cplx>::zero(1, 1, c0));
  const auto dg = diagonalize(a);
  REQUIRE(dg.circulant_eigs.size() == 3);
  CHECK(std::abs(dg.reduced(0, 0) - Cplx(2, 0)) < 1e-9);  // augmentation 1+2+0-1
  // Spectrum = the four transform evaluations of the first row.
  auto spec = sorted_by_re_im(join_spectrum(a));
  std::vector<Cplx> direct;
  for (unsigned f = 0; f < 4; ++f) {
    Cplx s(0, 0);
    for (unsigned m = 0; m < 4; ++m) {
      const double arg = 2.0 * std::numbers::pi * ((f * m) % 4) / 4.0;
      s += c[m] * Cplx(std::cos(arg), std::sin(arg));
    }
    direct.push_back(s);
  }
  CHECK(max_abs_diff(spec, sorted_by_re_im(direct)) < 1e-7 * 10);
}
