#include "kt/newton.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace kt {

void SlopeDatum::add(const Rat& slope, long long mult) {
  internal_check(mult > 0, "slope multiplicity must be positive");
  auto it = std::lower_bound(
      entries.begin(), entries.end(), slope,
      [](const Entry& e, const Rat& s) { return e.slope < s; });
  if (it != entries.end() && it->slope == slope) {
    it->mult += mult;
  } else {
    entries.insert(it, Entry{slope, mult});
  }
}

long long SlopeDatum::total_multiplicity() const {
  long long t = 0;
  for (const auto& e : entries) t += e.mult;
  return t;
}

Rat SlopeDatum::weighted_sum() const {
  Rat s(0);
  for (const auto& e : entries) s += e.slope * Rat(e.mult);
  return s;
}

bool SlopeDatum::operator==(const SlopeDatum& o) const {
  if (entries.size() != o.entries.size()) return false;
  for (size_t i = 0; i < entries.size(); ++i)
    if (entries[i].slope != o.entries[i].slope || entries[i].mult != o.entries[i].mult)
      return false;
  return true;
}

std::string SlopeDatum::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SlopeDatum& s) {
  os << '{';
  for (size_t i = 0; i < s.entries.size(); ++i) {
    if (i) os << ", ";
    os << s.entries[i].slope << " x" << s.entries[i].mult;
  }
  return os << '}';
}

SlopeDatum newton_polygon(const std::vector<NewtonPoint>& points) {
  // keep the lowest finite valuation per degree
  std::map<long long, long long> best;
  long long maxDegAll = 0;
  bool seenAny = false;
  for (const auto& p : points) {
    if (!seenAny || p.degree > maxDegAll) maxDegAll = p.degree;
    seenAny = true;
    if (!p.finite) continue;
    auto it = best.find(p.degree);
    if (it == best.end() || p.valuation < it->second) best[p.degree] = p.valuation;
  }
  require(best.size() >= 2, "newton polygon needs at least two finite points");
  require(best.count(maxDegAll) == 1, "newton polygon needs a finite point at maximal degree");

  // lower convex hull, left to right
  std::vector<std::pair<long long, long long>> pts(best.begin(), best.end());
  std::vector<std::pair<long long, long long>> hull;
  auto cross = [](const std::pair<long long, long long>& o,
                  const std::pair<long long, long long>& a,
                  const std::pair<long long, long long>& b) {
    __int128 v = __int128(a.first - o.first) * (b.second - o.second) -
                 __int128(a.second - o.second) * (b.first - o.first);
    return v;
  };
  for (const auto& p : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
      hull.pop_back();
    hull.push_back(p);
  }

  SlopeDatum out;
  for (size_t i = 1; i < hull.size(); ++i) {
    long long run = hull[i].first - hull[i - 1].first;
    long long rise = hull[i].second - hull[i - 1].second;
    out.add(Rat(-rise, run), run);
  }
  return out;
}

}  // namespace kt
