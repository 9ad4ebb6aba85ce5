#include <doctest.h>

#include <random>

#include "kt/archimedean.hpp"
#include "kt/linalg.hpp"

using namespace kt;

namespace {

GaussianRat grat(long long re, long long im = 0) { return GaussianRat(Rat(re), Rat(im)); }

GaussMatrix identity(int n) {
  GaussMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = GaussianRat(i == j ? 1 : 0);
  return m;
}

// standard valid alpha matrix in degree m: identity for even m, the
// symplectic pairing blocks for odd m (dimension must be even)
GaussMatrix standard_alpha(int m, int dim) {
  GaussMatrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = GaussianRat(0);
  if (m % 2 == 0) {
    for (int i = 0; i < dim; ++i) a(i, i) = GaussianRat(1);
  } else {
    for (int i = 0; i + 1 < dim; i += 2) {
      a(i, i + 1) = grat(-1);
      a(i + 1, i) = grat(1);
    }
  }
  return a;
}

GaussMatrix random_invertible(int n, std::mt19937_64& rng) {
  while (true) {
    GaussMatrix q(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        q(i, j) = GaussianRat(Rat(static_cast<long long>(rng() % 5) - 2),
                              Rat(static_cast<long long>(rng() % 5) - 2));
    if (rank_of<GaussianRat>(q) == n) return q;
  }
}

// conjugate the standard alpha by a random basis change: M = Q M0 conj(Q)^{-1}
GaussMatrix random_alpha(int m, int dim, std::mt19937_64& rng) {
  GaussMatrix q = random_invertible(dim, rng);
  GaussMatrix qc = conj_matrix(q);
  return q * standard_alpha(m, dim) * inverse_matrix<GaussianRat>(qc);
}

}  // namespace

TEST_CASE("gaussian rational field") {
  GaussianRat i = GaussianRat::i();
  CHECK(i * i == grat(-1));
  CHECK(i.conj() == -i);
  GaussianRat z = grat(3, 4);
  CHECK(z.norm() == Rat(25));
  CHECK(z * z.inverse() == grat(1));
  CHECK((z + z.conj()) == grat(6));
  CHECK_THROWS_AS(grat(0).inverse(), ValidationError);
}

TEST_CASE("validate_graded on the reference examples") {
  // degree 2, dim 1, alpha = plain conjugation: valid
  GradedSemilinearSpace s;
  s.alpha[2] = identity(1);
  CHECK(validate_graded(s).ok);
  // degree 3, dim 2, alpha(z1,z2) = (-conj z2, conj z1): valid
  GradedSemilinearSpace q;
  q.alpha[3] = GaussMatrix(2, 2);
  q.alpha[3] << grat(0), grat(-1), grat(1), grat(0);
  CHECK(validate_graded(q).ok);
  // degree 1, dim 1, alpha = conjugation: alpha^2 = +1 but parity wants -1
  GradedSemilinearSpace bad;
  bad.alpha[1] = identity(1);
  auto v = validate_graded(bad);
  CHECK_FALSE(v.ok);
  CHECK(v.violation.find("degree 1") != std::string::npos);
}

TEST_CASE("h2 over the reals is the sign") {
  CHECK(h2_real_class(Rat(4)) == 1);
  CHECK(h2_real_class(Rat(-1)) == -1);
  CHECK(h2_real_class(Rat(-9)) == -1);
  CHECK_THROWS_AS(h2_real_class(Rat(0)), ValidationError);
  // multiplicative
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    Rat a(static_cast<long long>(rng() % 19) - 9, 1 + static_cast<long long>(rng() % 6));
    Rat b(static_cast<long long>(rng() % 19) - 9, 1 + static_cast<long long>(rng() % 6));
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(h2_real_class(a * b) == h2_real_class(a) * h2_real_class(b));
  }
}

TEST_CASE("tensor_graded") {
  std::mt19937_64 rng(17);
  // two quaternionic degree-1 pieces tensor to degree 2 with alpha^2 = +1
  GradedSemilinearSpace a, b;
  a.alpha[1] = standard_alpha(1, 2);
  b.alpha[1] = standard_alpha(1, 2);
  auto ab = tensor_graded(a, b);
  REQUIRE(ab.alpha.count(2) == 1);
  CHECK(ab.alpha[2].rows() == 4);
  CHECK(validate_graded(ab).ok);
  // unit in degree 0 acts as identity
  GradedSemilinearSpace unit;
  unit.alpha[0] = identity(1);
  GradedSemilinearSpace s;
  s.alpha[-1] = random_alpha(-1, 2, rng);
  s.alpha[2] = random_alpha(2, 3, rng);
  auto us = tensor_graded(unit, s);
  CHECK(us.alpha.size() == 2);
  for (auto& [m, mat] : s.alpha) {
    REQUIRE(us.alpha.count(m) == 1);
    CHECK(us.alpha[m] == mat);
  }
  // degree 3 x degree 2 lands in degree 5 and stays valid
  GradedSemilinearSpace c, d;
  c.alpha[3] = random_alpha(3, 2, rng);
  d.alpha[2] = random_alpha(2, 1, rng);
  auto cd = tensor_graded(c, d);
  REQUIRE(cd.alpha.count(5) == 1);
  CHECK(validate_graded(cd).ok);
  // parity violation in a factor is rejected
  GradedSemilinearSpace bad;
  bad.alpha[1] = identity(1);
  CHECK_THROWS_AS(tensor_graded(bad, unit), ValidationError);
}

TEST_CASE("decompose_graded on the reference examples") {
  // degree 0, dim 3, alpha = conj: three real lines
  GradedSemilinearSpace s;
  s.alpha[0] = identity(3);
  auto parts = decompose_graded(s);
  CHECK(parts.size() == 3);
  for (auto& p : parts) CHECK(p.basis.cols() == 1);
  // degree 1, dim 2 quaternionic: a single plane
  GradedSemilinearSpace q;
  q.alpha[1] = standard_alpha(1, 2);
  parts = decompose_graded(q);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].basis.cols() == 2);
  // degree 2, dim 2, swap-conjugate: two lines
  GradedSemilinearSpace w;
  w.alpha[2] = GaussMatrix(2, 2);
  w.alpha[2] << grat(0), grat(1), grat(1), grat(0);
  parts = decompose_graded(w);
  REQUIRE(parts.size() == 2);
  for (auto& p : parts) {
    CHECK(p.basis.cols() == 1);
    // the line is alpha-fixed: alpha(v) = v
    GaussVector v = p.basis.col(0);
    GaussVector av = w.alpha[2] * conj_vector(v);
    for (int i = 0; i < 2; ++i) CHECK(av(i) == v(i));
  }
}

TEST_CASE("randomized graded spaces decompose exactly") {
  std::mt19937_64 rng(20240811);
  for (int t = 0; t < 60; ++t) {
    GradedSemilinearSpace s;
    int pieces = 1 + static_cast<int>(rng() % 3);
    for (int pc = 0; pc < pieces; ++pc) {
      int m = static_cast<int>(rng() % 7) - 3;
      if (s.alpha.count(m)) continue;
      int dim = 1 + static_cast<int>(rng() % 3);
      if (m % 2 != 0) dim *= 2;
      s.alpha[m] = random_alpha(m, dim, rng);
    }
    auto v = validate_graded(s);
    REQUIRE(v.ok);
    auto parts = decompose_graded(s);
    std::map<int, int> got;
    for (auto& p : parts) {
      CHECK(p.basis.cols() == (p.degree % 2 == 0 ? 1 : 2));
      got[p.degree] += static_cast<int>(p.basis.cols());
      // summand is alpha-stable: alpha(columns) lies in the column span
      const GaussMatrix& mat = s.alpha.at(p.degree);
      for (int c = 0; c < p.basis.cols(); ++c) {
        GaussVector av = mat * conj_vector(p.basis.col(c));
        auto x = solve_linear<GaussianRat>(p.basis, av);
        CHECK(x.has_value());
        GaussVector back = p.basis * *x;
        for (int i = 0; i < av.rows(); ++i) CHECK(back(i) == av(i));
      }
    }
    for (auto& [m, mat] : s.alpha) CHECK(got[m] == mat.rows());
    // per-degree reassembly: the union of summand bases has full rank
    for (auto& [m, mat] : s.alpha) {
      int d = static_cast<int>(mat.rows());
      GaussMatrix all(d, d);
      int col = 0;
      for (auto& p : parts)
        if (p.degree == m)
          for (int c = 0; c < p.basis.cols(); ++c) all.col(col++) = p.basis.col(c);
      REQUIRE(col == d);
      CHECK(rank_of<GaussianRat>(all) == d);
    }
  }
}

TEST_CASE("parity-violating mutations are rejected") {
  std::mt19937_64 rng(5150);
  for (int t = 0; t < 40; ++t) {
    int m = static_cast<int>(rng() % 5) - 2;
    int dim = (m % 2 == 0) ? 1 + static_cast<int>(rng() % 3)
                           : 2 * (1 + static_cast<int>(rng() % 2));
    GradedSemilinearSpace s;
    s.alpha[m] = random_alpha(m, dim, rng);
    REQUIRE(validate_graded(s).ok);
    // flip the parity target by scaling one row by i (alpha^2 changes sign
    // on that coordinate's orbit) or by adding a unit to one entry
    GradedSemilinearSpace mutated = s;
    int i = static_cast<int>(rng() % dim), j = static_cast<int>(rng() % dim);
    mutated.alpha[m](i, j) += GaussianRat(1);
    GaussMatrix sq = mutated.alpha[m] * conj_matrix(mutated.alpha[m]);
    GaussianRat want = (m % 2 == 0) ? GaussianRat(1) : GaussianRat(-1);
    bool stillValid = true;
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b)
        if (!(sq(a, b) == (a == b ? want : GaussianRat(0)))) stillValid = false;
    if (stillValid) continue;  // mutation happened to stay in the group
    CHECK_FALSE(validate_graded(mutated).ok);
  }
}
