#include <doctest.h>

#include <random>

#include "kt/laurent.hpp"
#include "kt/newton.hpp"

using kt::FqElem;
using kt::LaurentPoly;
using kt::NewtonPoint;
using kt::Rat;
using kt::fq_field;

TEST_CASE("laurent normalization and arithmetic") {
  auto f3 = fq_field(3, 1);
  LaurentPoly pi = LaurentPoly::pi(f3);
  LaurentPoly x = pi + LaurentPoly::one(f3);          // 1 + pi
  LaurentPoly y = pi.shifted(-2);                     // pi^{-1}
  CHECK(y.order() == -1);
  CHECK((x * y).min_deg() == -1);
  CHECK((x - x).is_zero());
  CHECK(x * LaurentPoly::one(f3) == x);
  CHECK((x * LaurentPoly::zero(f3)).is_zero());
  // cancellation renormalizes the support
  LaurentPoly z = x - pi;  // == 1
  CHECK(z.is_one());
  CHECK(pi.inverse() * pi == LaurentPoly::one(f3));
  CHECK_THROWS_AS(x.inverse(), kt::ValidationError);
  // round trip through the fraction field
  CHECK(LaurentPoly::from_ratfunc(y.as_ratfunc()) == y);
  CHECK(LaurentPoly::from_ratfunc(x.as_ratfunc()) == x);
}

TEST_CASE("laurent frobenius acts on coefficients only") {
  auto f4 = fq_field(2, 2);
  FqElem g = FqElem::gen(f4);
  LaurentPoly f = LaurentPoly::monomial(f4, g, 3) + LaurentPoly::one(f4);
  LaurentPoly ff = f.frobenius(1);
  CHECK(ff.coeff(3) == g * g);  // g^2 in F_4
  CHECK(ff.coeff(0) == FqElem::one(f4));
  CHECK(f.frobenius(2) == f);
}

namespace {

// oracle: a lower hull must keep every finite point on or above each segment
bool all_points_above(const std::vector<NewtonPoint>& pts, const kt::SlopeDatum& sd) {
  // rebuild the hull from the slope data, anchored at the leftmost point
  long long minDeg = 0, minVal = 0;
  bool first = true;
  for (const auto& p : pts) {
    if (!p.finite) continue;
    if (first || p.degree < minDeg) {
      minDeg = p.degree;
      minVal = p.valuation;
    }
    if (first) minVal = p.valuation;
    first = false;
  }
  // walk segments in hull order (slopes ascending after negation means
  // hull slopes descending in true slope; reconstruct by sorting ascending
  // on the negated value = descending true slope is wrong; hull goes
  // left-to-right with increasing true slope, i.e. decreasing output slope)
  std::vector<std::pair<Rat, long long>> segs;
  for (const auto& e : sd.entries) segs.emplace_back(e.slope, e.mult);
  // output slopes are negated hull slopes; true hull slopes increase
  // left-to-right, so output slopes decrease left-to-right
  std::sort(segs.begin(), segs.end(),
            [](const auto& a, const auto& b) { return b.first < a.first; });
  Rat x(minDeg), y(minVal);
  std::vector<std::pair<Rat, Rat>> vertices{{x, y}};
  for (auto& [sl, mult] : segs) {
    x += Rat(mult);
    y += -sl * Rat(mult);
    vertices.emplace_back(x, y);
  }
  for (const auto& p : pts) {
    if (!p.finite) continue;
    // find the segment containing p.degree and test the line inequality
    for (size_t i = 1; i < vertices.size(); ++i) {
      Rat x0 = vertices[i - 1].first, y0 = vertices[i - 1].second;
      Rat x1 = vertices[i].first, y1 = vertices[i].second;
      if (Rat(p.degree) < x0 || Rat(p.degree) > x1 || x0 == x1) continue;
      Rat lineY = y0 + (y1 - y0) * (Rat(p.degree) - x0) / (x1 - x0);
      if (Rat(p.valuation) < lineY) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("newton polygon on reference diagrams") {
  using kt::newton_polygon;
  // characteristic polynomial T^2 - pi: valuations (0,1), (2,0)
  auto sd = newton_polygon({NewtonPoint::at(0, 1), NewtonPoint::at(2, 0)});
  REQUIRE(sd.entries.size() == 1);
  CHECK(sd.entries[0].slope == Rat(1, 2));
  CHECK(sd.entries[0].mult == 2);
  // a unit: slope zero
  sd = newton_polygon({NewtonPoint::at(0, 0), NewtonPoint::at(1, 0)});
  REQUIRE(sd.entries.size() == 1);
  CHECK(sd.entries[0].slope == Rat(0));
  CHECK(sd.entries[0].mult == 1);
  // two segments
  sd = newton_polygon(
      {NewtonPoint::at(0, 3), NewtonPoint::at(1, 1), NewtonPoint::at(2, 0)});
  REQUIRE(sd.entries.size() == 2);
  CHECK(sd.entries[0].slope == Rat(1));
  CHECK(sd.entries[0].mult == 1);
  CHECK(sd.entries[1].slope == Rat(2));
  CHECK(sd.entries[1].mult == 1);
  // infinite points are skipped, hull bridges them
  sd = newton_polygon({NewtonPoint::at(0, 2), NewtonPoint::infinite(1),
                       NewtonPoint::at(2, 0)});
  REQUIRE(sd.entries.size() == 1);
  CHECK(sd.entries[0].slope == Rat(1));
  CHECK(sd.entries[0].mult == 2);
  // need two finite points and a finite maximum
  CHECK_THROWS_AS(newton_polygon({NewtonPoint::at(0, 0)}), kt::ValidationError);
  CHECK_THROWS_AS(
      newton_polygon({NewtonPoint::at(0, 0), NewtonPoint::at(1, 0), NewtonPoint::infinite(2)}),
      kt::ValidationError);
}

TEST_CASE("newton polygon properties on random diagrams") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 500; ++t) {
    int n = 2 + static_cast<int>(rng() % 8);
    std::vector<NewtonPoint> pts;
    for (int i = 0; i < n; ++i) {
      if (i + 1 < n && rng() % 4 == 0) {
        pts.push_back(NewtonPoint::infinite(i));
      } else {
        pts.push_back(NewtonPoint::at(i, static_cast<long long>(rng() % 21) - 10));
      }
    }
    if (!pts[0].finite) pts[0] = NewtonPoint::at(0, static_cast<long long>(rng() % 5));
    if (!pts.back().finite) pts.back() = NewtonPoint::at(n - 1, 0);
    auto sd = kt::newton_polygon(pts);
    // multiplicities cover the degree span
    long long lo = n, hi = 0;
    for (auto& p : pts)
      if (p.finite) {
        lo = std::min(lo, p.degree);
        hi = std::max(hi, p.degree);
      }
    CHECK(sd.total_multiplicity() == hi - lo);
    // entries sorted ascending (multiset canonical form)
    for (size_t i = 1; i < sd.entries.size(); ++i)
      CHECK(sd.entries[i - 1].slope < sd.entries[i].slope);
    // hull property against the raw points
    CHECK(all_points_above(pts, sd));
  }
}
