#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kt/fq.hpp"
#include "kt/ratfunc.hpp"

namespace kt {

/// Laurent polynomial in a uniformizer pi with coefficients in a finite
/// field. Normalized so the leading and trailing coefficients are nonzero
/// unless the value is zero. Unbound integer literals are supported for
/// Eigen-scalar use.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int v);  // NOLINT: implicit for Eigen scalar use
  LaurentPoly(FqField cfg, long long minDeg, std::vector<FqElem> coeffs);

  static LaurentPoly zero(const FqField& cfg) { return LaurentPoly(cfg, 0, {}); }
  static LaurentPoly one(const FqField& cfg) {
    return LaurentPoly(cfg, 0, {FqElem::one(cfg)});
  }
  /// c * pi^d
  static LaurentPoly monomial(const FqField& cfg, const FqElem& c, long long d) {
    return LaurentPoly(cfg, d, {c.bind(cfg)});
  }
  static LaurentPoly pi(const FqField& cfg, long long power = 1) {
    return monomial(cfg, FqElem::one(cfg), power);
  }
  static LaurentPoly constant(const FqField& cfg, const FqElem& c) {
    return monomial(cfg, c, 0);
  }

  bool bound() const { return cfg_ != nullptr; }
  const FqField& field() const { return cfg_; }
  LaurentPoly bind(const FqField& cfg) const;

  bool is_zero() const;
  bool is_one() const;
  bool is_monomial() const;

  long long min_deg() const { return minDeg_; }
  long long max_deg() const {
    internal_check(!is_zero(), "max_deg of zero");
    return minDeg_ + static_cast<long long>(c_.size()) - 1;
  }
  /// pi-adic order; requires a nonzero value.
  long long order() const {
    internal_check(!is_zero(), "order of zero Laurent polynomial");
    return minDeg_;
  }
  FqElem coeff(long long deg) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

  /// Multiply by pi^j.
  LaurentPoly shifted(long long j) const;

  /// Coefficientwise p^i-power Frobenius; fixes pi.
  LaurentPoly frobenius(int i) const;

  /// Inverse when the value is a unit (monomial); throws otherwise.
  LaurentPoly inverse() const;

  /// View in the fraction field F_q(pi); the variable of the result is pi.
  RatFunc as_ratfunc() const;
  /// Back-conversion; requires the denominator to be a monomial.
  static LaurentPoly from_ratfunc(const RatFunc& f);

  std::string str() const;

 private:
  void normalize();
  FqField cfg_;
  long long minDeg_ = 0;
  std::vector<FqElem> c_;  // literal payload lives in c_[0] when unbound
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f);

inline LaurentPoly inv(const LaurentPoly& f) { return f.inverse(); }

}  // namespace kt
