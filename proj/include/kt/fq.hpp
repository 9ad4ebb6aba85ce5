#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "kt/errors.hpp"

namespace kt {

/// Description of a finite field F_{p^k} = F_p[x]/(modulus). The modulus is
/// the lexicographically smallest monic irreducible of degree k, ordering the
/// coefficient tuples (c_0, ..., c_{k-1}); this makes every fixture
/// reproducible without a table of Conway polynomials.
struct FqConfig {
  long long p = 0;
  int k = 0;
  std::vector<long long> modulus;  // length k+1, ascending powers, monic

  long long q() const;  // p^k
  std::string str() const;
};

using FqField = std::shared_ptr<const FqConfig>;

/// Deterministic field constructor; repeated calls return the same shared
/// config instance.
FqField fq_field(long long p, int k);

bool is_prime_ll(long long n);

/// Element of a finite field. A default-constructed or int-constructed
/// element is an unbound integer literal; it binds to a concrete field the
/// first time it meets a bound operand. This makes the type usable as an
/// Eigen scalar, where generic code conjures Scalar(0) and Scalar(1).
class FqElem {
 public:
  FqElem() : lit_(0) {}
  FqElem(int v) : lit_(v) {}        // NOLINT: Eigen needs implicit Scalar(int)
  FqElem(long long v) : lit_(v) {}  // NOLINT
  FqElem(FqField cfg, std::vector<long long> coeffs);

  static FqElem zero(const FqField& cfg);
  static FqElem one(const FqField& cfg);
  /// The residue class of x, i.e. the canonical generator.
  static FqElem gen(const FqField& cfg);
  static FqElem from_int(const FqField& cfg, long long v);

  bool bound() const { return cfg_ != nullptr; }
  const FqField& field() const { return cfg_; }
  const std::vector<long long>& coeffs() const;
  long long literal() const { return lit_; }

  bool is_zero() const;
  bool is_one() const;

  FqElem operator-() const;
  FqElem& operator+=(const FqElem& o);
  FqElem& operator-=(const FqElem& o);
  FqElem& operator*=(const FqElem& o);
  FqElem& operator/=(const FqElem& o);

  friend FqElem operator+(FqElem a, const FqElem& b) { return a += b; }
  friend FqElem operator-(FqElem a, const FqElem& b) { return a -= b; }
  friend FqElem operator*(FqElem a, const FqElem& b) { return a *= b; }
  friend FqElem operator/(FqElem a, const FqElem& b) { return a /= b; }

  friend bool operator==(const FqElem& a, const FqElem& b);
  friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

  FqElem inverse() const;
  FqElem pow(long long e) const;

  /// p-power Frobenius x -> x^(p^i).
  FqElem frobenius(int i = 1) const;

  /// Binds a literal to cfg; no-op when already bound to the same field.
  FqElem bind(const FqField& cfg) const;

  std::string str() const;

 private:
  FqField cfg_;                  // null for literals
  std::vector<long long> c_;     // length k when bound
  long long lit_ = 0;            // literal value when unbound
};

std::ostream& operator<<(std::ostream& os, const FqElem& e);

inline FqElem inv(const FqElem& e) { return e.inverse(); }

/// All field elements in lexicographic coefficient order (c_0,...,c_{k-1});
/// index runs over 0..q-1 interpreted base p, least significant digit = c_0.
FqElem fq_element_at(const FqField& cfg, long long index);

/// Embedding of F_{p^j} into F_{p^m} for j | m, determined by sending the
/// generator of the small field to the lexicographically smallest root of its
/// minimal polynomial in the big field. Cached and deterministic.
class FqEmbedding {
 public:
  FqEmbedding() = default;
  FqEmbedding(FqField src, FqField dst, FqElem genImage)
      : src_(std::move(src)), dst_(std::move(dst)), genImage_(std::move(genImage)) {}

  const FqField& source() const { return src_; }
  const FqField& target() const { return dst_; }

  FqElem operator()(const FqElem& x) const;

  /// Inverse image; throws if x is not in the embedded subfield.
  FqElem section(const FqElem& x) const;

 private:
  FqField src_, dst_;
  FqElem genImage_;
};

const FqEmbedding& fq_embedding(const FqField& src, const FqField& dst);

}  // namespace kt
