#include <doctest.h>

#include <random>

#include "kt/fq_factor.hpp"

using kt::FqElem;
using kt::FqPoly;
using kt::fq_field;

namespace {

FqPoly poly_from(const kt::FqField& cfg, std::initializer_list<long long> asc) {
  std::vector<FqElem> c;
  for (long long v : asc) c.push_back(FqElem::from_int(cfg, v));
  return FqPoly(std::move(c));
}

FqPoly remultiply(const kt::FqFactorResult& r, const kt::FqField& cfg) {
  FqPoly acc = kt::bind_poly(FqPoly(r.unit), cfg);
  for (const auto& [f, m] : r.factors)
    for (int i = 0; i < m; ++i) acc = acc * f;
  return acc;
}

}  // namespace

TEST_CASE("named factorizations over F_2") {
  auto f2 = fq_field(2, 1);
  // x^2 + x = x (x + 1)
  auto r = kt::poly_factor(poly_from(f2, {0, 1, 1}), f2);
  REQUIRE(r.factors.size() == 2);
  CHECK(r.factors[0].first == poly_from(f2, {0, 1}));
  CHECK(r.factors[0].second == 1);
  CHECK(r.factors[1].first == poly_from(f2, {1, 1}));
  CHECK(r.factors[1].second == 1);
  // x^2 + 1 = (x + 1)^2 in characteristic 2
  r = kt::poly_factor(poly_from(f2, {1, 0, 1}), f2);
  REQUIRE(r.factors.size() == 1);
  CHECK(r.factors[0].first == poly_from(f2, {1, 1}));
  CHECK(r.factors[0].second == 2);
  // irreducible input comes back alone with multiplicity 1
  FqPoly irr = poly_from(f2, {1, 1, 0, 1});  // x^3 + x + 1
  CHECK(kt::is_irreducible(irr, f2));
  r = kt::poly_factor(irr, f2);
  REQUIRE(r.factors.size() == 1);
  CHECK(r.factors[0].first == irr);
  CHECK(r.factors[0].second == 1);
  CHECK_THROWS_AS(kt::poly_factor(FqPoly(), f2), kt::ValidationError);
}

TEST_CASE("factor then remultiply on random polynomials") {
  std::mt19937_64 rng(2024);
  for (auto [p, k] : {std::pair<long long, int>{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
    auto cfg = fq_field(p, k);
    long long q = cfg->q();
    int trials = (p == 2 && k == 1) ? 400 : 150;
    for (int t = 0; t < trials; ++t) {
      int deg = 1 + static_cast<int>(rng() % 12);
      std::vector<FqElem> c;
      for (int i = 0; i < deg; ++i)
        c.push_back(kt::fq_element_at(cfg, static_cast<long long>(rng() % q)));
      // nonzero leading coefficient
      c.push_back(kt::fq_element_at(cfg, 1 + static_cast<long long>(rng() % (q - 1))));
      FqPoly f(std::move(c));
      auto r = kt::poly_factor(f, cfg);
      CHECK(remultiply(r, cfg) == f);
      long long degSum = 0;
      for (const auto& [g, m] : r.factors) {
        CHECK(g.is_monic());
        CHECK(kt::is_irreducible(g, cfg));
        degSum += static_cast<long long>(g.degree()) * m;
      }
      CHECK(degSum == f.degree());
    }
  }
}

TEST_CASE("factorization is deterministic for a fixed seed") {
  auto cfg = fq_field(3, 1);
  FqPoly f = poly_from(cfg, {1, 2, 0, 1, 1, 2});
  auto a = kt::poly_factor(f, cfg);
  auto b = kt::poly_factor(f, cfg);
  REQUIRE(a.factors.size() == b.factors.size());
  for (size_t i = 0; i < a.factors.size(); ++i) {
    CHECK(a.factors[i].first == b.factors[i].first);
    CHECK(a.factors[i].second == b.factors[i].second);
  }
  CHECK(a.seed == kt::kDefaultFactorSeed);
}

TEST_CASE("roots") {
  auto f3 = fq_field(3, 1);
  // (x - 1)^2 (x - 2) = x^3 + 2x^2 ... build directly
  FqPoly f = poly_from(f3, {1, 1}) * poly_from(f3, {1, 1}) * poly_from(f3, {2, 1});
  auto roots = kt::poly_roots(f, f3);
  REQUIRE(roots.size() == 2);
  bool sawDouble = false, sawSingle = false;
  for (auto& [r, m] : roots) {
    if (r == FqElem::from_int(f3, -1) && m == 2) sawDouble = true;
    if (r == FqElem::from_int(f3, -2) && m == 1) sawSingle = true;
  }
  CHECK(sawDouble);
  CHECK(sawSingle);
}
