#include <doctest.h>

#include <random>

#include "kt/linalg.hpp"

using kt::DenseMatrix;
using kt::DenseVector;
using kt::FqElem;
using kt::LaurentPoly;
using kt::Rat;
using kt::fq_field;

TEST_CASE("rank, kernel and solve over F_q") {
  auto f5 = fq_field(5, 1);
  DenseMatrix<FqElem> m(2, 3);
  m << FqElem::from_int(f5, 1), FqElem::from_int(f5, 2), FqElem::from_int(f5, 3),
      FqElem::from_int(f5, 0), FqElem::from_int(f5, 1), FqElem::from_int(f5, 4);
  CHECK(kt::rank_of<FqElem>(m) == 2);
  auto ker = kt::kernel_basis<FqElem>(m);
  REQUIRE(ker.cols() == 1);
  DenseVector<FqElem> kerVec = ker.col(0);
  DenseVector<FqElem> image = m * kerVec;
  for (int i = 0; i < image.rows(); ++i) CHECK(image(i).is_zero());

  DenseVector<FqElem> b(2);
  b << FqElem::from_int(f5, 1), FqElem::from_int(f5, 2);
  auto x = kt::solve_linear<FqElem>(m, b);
  REQUIRE(x.has_value());
  DenseVector<FqElem> ax = m * *x;
  for (int i = 0; i < 2; ++i) CHECK(ax(i) == b(i));
}

TEST_CASE("inverse over the rationals") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    int n = 1 + static_cast<int>(rng() % 4);
    DenseMatrix<Rat> a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        a(i, j) = Rat(static_cast<long long>(rng() % 11) - 5,
                      1 + static_cast<long long>(rng() % 4));
    if (kt::rank_of<Rat>(a) < n) continue;
    auto ainv = kt::inverse_matrix<Rat>(a);
    DenseMatrix<Rat> prod = a * ainv;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(prod(i, j) == Rat(i == j ? 1 : 0));
  }
}

TEST_CASE("ring determinant and charpoly over Laurent polynomials") {
  auto f2 = fq_field(2, 1);
  LaurentPoly zero = LaurentPoly::zero(f2);
  LaurentPoly one = LaurentPoly::one(f2);
  LaurentPoly pi = LaurentPoly::pi(f2);
  // [[0, pi], [1, 0]]: det = -pi, charpoly = X^2 - pi
  DenseMatrix<LaurentPoly> m(2, 2);
  m << zero, pi, one, zero;
  CHECK(kt::det_ring<LaurentPoly>(m, zero, one) == -pi);
  auto cp = kt::charpoly_ring<LaurentPoly>(m, zero, one);
  REQUIRE(cp.size() == 3);
  CHECK(cp[0] == -pi);
  CHECK(cp[1] == zero);
  CHECK(cp[2] == one);
  // determinant of a product is the product of determinants
  DenseMatrix<LaurentPoly> a(2, 2), b(2, 2);
  a << one, pi, zero, one + pi;
  b << pi.shifted(-2), zero, one, pi;
  DenseMatrix<LaurentPoly> ab = a * b;
  CHECK(kt::det_ring<LaurentPoly>(ab, zero, one) ==
        kt::det_ring<LaurentPoly>(a, zero, one) * kt::det_ring<LaurentPoly>(b, zero, one));
}

TEST_CASE("charpoly matches cofactor determinant on random rational matrices") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    int n = 1 + static_cast<int>(rng() % 4);
    DenseMatrix<Rat> a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = Rat(static_cast<long long>(rng() % 7) - 3);
    auto cp = kt::charpoly_ring<Rat>(a, Rat(0), Rat(1));
    REQUIRE(static_cast<int>(cp.size()) == n + 1);
    CHECK(cp[n] == Rat(1));
    // constant term is (-1)^n det
    Rat det = kt::det_ring<Rat>(a, Rat(0), Rat(1));
    CHECK(cp[0] == (n % 2 == 0 ? det : -det));
    // trace shows up in the subleading coefficient
    Rat tr(0);
    for (int i = 0; i < n; ++i) tr += a(i, i);
    CHECK(cp[n - 1] == -tr);
  }
}

TEST_CASE("GFp kernel dimensions") {
  // over F_2: rows (1,1,0), (0,1,1), (1,0,1) have rank 2
  kt::GFpKernel k2(2, 3);
  k2.add_row({1, 1, 0});
  k2.add_row({0, 1, 1});
  k2.add_row({1, 0, 1});
  CHECK(k2.rank() == 2);
  CHECK(k2.kernel_dim() == 1);
  // over F_3
  kt::GFpKernel k3(3, 2);
  k3.add_row({1, 2});
  k3.add_row({2, 4});  // dependent mod 3
  CHECK(k3.rank() == 1);
  CHECK(k3.kernel_dim() == 1);
}
