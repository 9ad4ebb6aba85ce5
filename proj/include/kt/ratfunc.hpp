#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "kt/fq.hpp"
#include "kt/fq_factor.hpp"
#include "kt/poly.hpp"

namespace kt {

/// Rational function over F_q in one variable, stored in reduced form with a
/// monic denominator. Default/int construction yields unbound literals, so
/// the type works as an Eigen scalar; literals bind on first contact with a
/// bound operand.
class RatFunc {
 public:
  RatFunc() : num_(), den_(FqPoly::one()) {}
  RatFunc(int v) : num_(FqPoly(FqElem(v))), den_(FqPoly::one()) {}  // NOLINT
  RatFunc(FqField cfg, FqPoly num, FqPoly den);
  RatFunc(FqField cfg, FqPoly num);

  static RatFunc variable(const FqField& cfg) {
    return RatFunc(cfg, bind_poly(FqPoly::x(), cfg));
  }
  static RatFunc constant(const FqField& cfg, const FqElem& c) {
    return RatFunc(cfg, FqPoly(c.bind(cfg)));
  }

  bool bound() const { return cfg_ != nullptr; }
  const FqField& field() const { return cfg_; }
  const FqPoly& num() const { return num_; }
  const FqPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  RatFunc bind(const FqField& cfg) const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc inverse() const;

  /// Coefficientwise p^i-power Frobenius; fixes the variable.
  RatFunc frobenius(int i) const;

  std::string str() const;

 private:
  void normalize();
  FqField cfg_;  // null for literals
  FqPoly num_, den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

inline RatFunc inv(const RatFunc& f) { return f.inverse(); }

/// A place of F_q(t): either the infinite place or a monic irreducible
/// polynomial. The degree of the infinite place is 1.
struct PlaceId {
  bool infinite = false;
  FqPoly poly;  // monic irreducible; empty when infinite

  static PlaceId infinity() {
    PlaceId v;
    v.infinite = true;
    return v;
  }
  static PlaceId finite(const FqPoly& monicIrreducible) {
    PlaceId v;
    v.poly = monicIrreducible;
    return v;
  }

  int degree() const { return infinite ? 1 : poly.degree(); }
  std::string str() const;
};

bool operator==(const PlaceId& a, const PlaceId& b);
bool operator!=(const PlaceId& a, const PlaceId& b);
bool operator<(const PlaceId& a, const PlaceId& b);
std::ostream& operator<<(std::ostream& os, const PlaceId& v);

/// Validates that the place is well-formed over cfg (monic irreducible).
void validate_place(const PlaceId& v, const FqField& cfg);

/// v-adic valuation of a nonzero rational function; at infinity this is
/// deg(den) - deg(num).
long long ratfunc_valuation(const RatFunc& f, const PlaceId& v);

/// Principal divisor of f: all places with nonzero valuation (including
/// infinity). Satisfies sum of ord_v(f) * deg(v) = 0.
std::map<PlaceId, long long> ratfunc_divisor(const RatFunc& f,
                                             std::uint64_t seed = kDefaultFactorSeed);

}  // namespace kt
