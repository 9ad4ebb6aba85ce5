#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kt/errors.hpp"

namespace kt {

/// Dense univariate polynomial over a field scalar T. Coefficients ascend;
/// the zero polynomial has an empty coefficient vector and degree -1.
/// T must provide: default/int construction, ring operators, is_zero(),
/// and a free inv(T) for division.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit Poly(T constant) {
    c_.push_back(std::move(constant));
    trim();
  }

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(std::vector<T>{T(1)}); }
  static Poly x() { return Poly(std::vector<T>{T(0), T(1)}); }
  static Poly monomial(int deg, T coeff) {
    std::vector<T> c(deg + 1, T(0));
    c[deg] = std::move(coeff);
    return Poly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }

  const T& lead() const {
    internal_check(!c_.empty(), "lead of zero polynomial");
    return c_.back();
  }

  T coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return T(0);
    return c_[i];
  }

  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator*(const T& s, const Poly& a) {
    Poly r = a;
    for (auto& x : r.c_) x = s * x;
    r.trim();
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Euclidean division; returns (quotient, remainder).
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require(!b.is_zero(), "polynomial division by zero");
    Poly rem = a;
    T lcInv = inv(b.lead());
    std::vector<T> q;
    if (rem.degree() >= b.degree()) q.resize(rem.degree() - b.degree() + 1, T(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      int shift = rem.degree() - b.degree();
      T cq = rem.lead() * lcInv;
      q[shift] = cq;
      for (size_t i = 0; i < b.c_.size(); ++i)
        rem.c_[shift + i] = rem.c_[shift + i] - cq * b.c_[i];
      rem.trim();
    }
    return {Poly(std::move(q)), rem};
  }

  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  Poly monic() const {
    if (is_zero()) return *this;
    return inv(lead()) * *this;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> r(c_.size() - 1, T(0));
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = T(static_cast<int>(i)) * c_[i];
    return Poly(std::move(r));
  }

  T eval(const T& at) const {
    T acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
  }

  /// Substitute another polynomial for the variable.
  Poly compose(const Poly& inner) const {
    Poly acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * inner + Poly(c_[i]);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<T> c_;
};

template <class T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    Poly<T> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class T>
Poly<T> poly_powmod(Poly<T> base, unsigned long long e, const Poly<T>& m) {
  Poly<T> r = Poly<T>::one() % m;
  base = base % m;
  while (e) {
    if (e & 1) r = (r * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return r;
}

}  // namespace kt
