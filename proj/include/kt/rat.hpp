#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "kt/errors.hpp"

namespace kt {

/// Exact rational number on 64-bit words. Always stored reduced with a
/// positive denominator; every operation checks for overflow and throws
/// rather than wrapping. Values in this library are desk-scale, so the
/// 64-bit range is a documented limit, not a practical one.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rat(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b);
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  /// Floor of the rational as an integer.
  long long floor() const;

  std::string str() const;

 private:
  void normalize();
  long long num_;
  long long den_;  // > 0
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline Rat inv(const Rat& r) { return Rat(1) / r; }

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

/// Parse "a/b" or "a".
Rat parse_rat(const std::string& s);

/// Residue class in Q/Z, stored as the unique representative in [0, 1).
class QmodZ {
 public:
  QmodZ() : value_(0) {}
  explicit QmodZ(const Rat& r);

  const Rat& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }

  QmodZ operator-() const { return QmodZ(-value_); }
  friend QmodZ operator+(const QmodZ& a, const QmodZ& b) {
    return QmodZ(a.value_ + b.value_);
  }
  friend QmodZ operator-(const QmodZ& a, const QmodZ& b) {
    return QmodZ(a.value_ - b.value_);
  }
  friend bool operator==(const QmodZ& a, const QmodZ& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const QmodZ& a, const QmodZ& b) { return !(a == b); }

  /// Additive order in Q/Z (the reduced denominator).
  long long order() const { return value_.den(); }

  std::string str() const;

 private:
  Rat value_;
};

inline QmodZ qmodz(const Rat& r) { return QmodZ(r); }

std::ostream& operator<<(std::ostream& os, const QmodZ& q);

}  // namespace kt
