#include <doctest.h>

#include <random>

#include "kt/ratfunc.hpp"

using kt::FqElem;
using kt::FqPoly;
using kt::PlaceId;
using kt::RatFunc;
using kt::fq_field;

namespace {

FqPoly poly_from(const kt::FqField& cfg, std::initializer_list<long long> asc) {
  std::vector<FqElem> c;
  for (long long v : asc) c.push_back(FqElem::from_int(cfg, v));
  return FqPoly(std::move(c));
}

RatFunc random_ratfunc(const kt::FqField& cfg, std::mt19937_64& rng) {
  long long q = cfg->q();
  auto randPoly = [&](int maxDeg) {
    int deg = static_cast<int>(rng() % (maxDeg + 1));
    std::vector<FqElem> c;
    for (int i = 0; i < deg; ++i)
      c.push_back(kt::fq_element_at(cfg, static_cast<long long>(rng() % q)));
    c.push_back(kt::fq_element_at(cfg, 1 + static_cast<long long>(rng() % (q - 1))));
    return FqPoly(std::move(c));
  };
  return RatFunc(cfg, randPoly(4), randPoly(4));
}

}  // namespace

TEST_CASE("valuations at named places") {
  auto f3 = fq_field(3, 1);
  RatFunc t = RatFunc::variable(f3);
  PlaceId at_t = PlaceId::finite(poly_from(f3, {0, 1}));
  PlaceId infinity = PlaceId::infinity();
  CHECK(kt::ratfunc_valuation(t, at_t) == 1);
  CHECK(kt::ratfunc_valuation(t, infinity) == -1);
  // (t^2+1)/t over F_3 at the place (t^2+1): t^2+1 is irreducible mod 3
  PlaceId v = PlaceId::finite(poly_from(f3, {1, 0, 1}));
  kt::validate_place(v, f3);
  RatFunc f = RatFunc(f3, poly_from(f3, {1, 0, 1}), poly_from(f3, {0, 1}));
  CHECK(kt::ratfunc_valuation(f, v) == 1);
  CHECK(kt::ratfunc_valuation(f, at_t) == -1);
  CHECK(kt::ratfunc_valuation(f, infinity) == -1);
  CHECK_THROWS_AS(kt::ratfunc_valuation(RatFunc(0).bind(f3), at_t), kt::ValidationError);
}

TEST_CASE("valuation is additive and the product formula holds") {
  std::mt19937_64 rng(31);
  for (auto [p, k] : {std::pair<long long, int>{2, 1}, {3, 1}, {2, 2}}) {
    auto cfg = fq_field(p, k);
    for (int i = 0; i < 60; ++i) {
      RatFunc f = random_ratfunc(cfg, rng);
      RatFunc g = random_ratfunc(cfg, rng);
      if (f.is_zero() || g.is_zero()) continue;
      // additivity, checked at every place of the combined divisor
      auto divF = kt::ratfunc_divisor(f);
      auto divG = kt::ratfunc_divisor(g);
      auto divFG = kt::ratfunc_divisor(f * g);
      std::map<PlaceId, long long> all;
      for (auto& [v, m] : divF) all[v] += 0;
      for (auto& [v, m] : divG) all[v] += 0;
      for (auto& [v, m] : divFG) all[v] += 0;
      for (auto& [v, unused] : all) {
        CHECK(kt::ratfunc_valuation(f * g, v) ==
              kt::ratfunc_valuation(f, v) + kt::ratfunc_valuation(g, v));
      }
      // product formula: sum ord_v(f) deg(v) = 0 including infinity
      long long total = 0;
      for (auto& [v, m] : divF) total += m * v.degree();
      CHECK(total == 0);
    }
  }
}

TEST_CASE("ratfunc field operations") {
  auto f2 = fq_field(2, 1);
  RatFunc t = RatFunc::variable(f2);
  RatFunc one(1);
  RatFunc f = (t + one) / t;
  CHECK(f * t == t + one);
  CHECK((f - f).is_zero());
  CHECK(f / f == RatFunc(1).bind(f2));
  CHECK(f.inverse() * f == RatFunc(1).bind(f2));
  CHECK_THROWS_AS(RatFunc(0).bind(f2).inverse(), kt::ValidationError);
  // denominator normalized monic
  auto f3 = fq_field(3, 1);
  RatFunc g(f3, poly_from(f3, {1}), poly_from(f3, {0, 2}));
  CHECK(g.den().is_monic());
  // frobenius fixes the variable and is multiplicative
  auto f4 = fq_field(2, 2);
  RatFunc h(f4, FqPoly(FqElem::gen(f4)), poly_from(f4, {0, 1}));
  CHECK(h.frobenius(1) * h == h * h.frobenius(1));
  CHECK(h.frobenius(2) == h);
}
