#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kt/rat.hpp"

namespace kt {

/// Multiset of rational slopes with multiplicities; entries are kept sorted
/// ascending by slope and merged. The invariant of the Dieudonne-Manin
/// classification and of graded weight data alike.
struct SlopeDatum {
  struct Entry {
    Rat slope;
    long long mult;
  };
  std::vector<Entry> entries;

  void add(const Rat& slope, long long mult);
  long long total_multiplicity() const;
  /// Sum of slope * multiplicity.
  Rat weighted_sum() const;
  bool operator==(const SlopeDatum& o) const;
  bool operator!=(const SlopeDatum& o) const { return !(*this == o); }
  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const SlopeDatum& s);

/// One point of a valuation diagram: (degree, valuation), where the
/// valuation may be +infinity (finite == false) for a vanishing coefficient.
struct NewtonPoint {
  long long degree = 0;
  bool finite = true;
  long long valuation = 0;

  static NewtonPoint at(long long degree, long long valuation) {
    return NewtonPoint{degree, true, valuation};
  }
  static NewtonPoint infinite(long long degree) {
    return NewtonPoint{degree, false, 0};
  }
};

/// Slopes of the lower convex hull, negated so that a polynomial's output
/// lists the valuations of its roots; each slope carries the horizontal
/// length of its segment as multiplicity. Requires at least two finite
/// points and a finite point at the maximal degree.
SlopeDatum newton_polygon(const std::vector<NewtonPoint>& points);

}  // namespace kt
