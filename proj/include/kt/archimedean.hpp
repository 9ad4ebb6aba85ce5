#pragma once

#include <map>
#include <string>
#include <vector>

#include "kt/eigen.hpp"
#include "kt/rat.hpp"

namespace kt {

/// Gaussian rational a + b i: the exact model of C used for archimedean
/// structure constants. Conjugation is i -> -i.
class GaussianRat {
 public:
  GaussianRat() = default;
  GaussianRat(int v) : re_(v) {}  // NOLINT: Eigen literal
  GaussianRat(Rat re) : re_(std::move(re)) {}  // NOLINT
  GaussianRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRat i() { return GaussianRat(Rat(0), Rat(1)); }

  const Rat& real() const { return re_; }
  const Rat& imag() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_ == Rat(1) && im_.is_zero(); }

  GaussianRat conj() const { return GaussianRat(re_, -im_); }
  /// re^2 + im^2, a nonnegative rational.
  Rat norm() const { return re_ * re_ + im_ * im_; }

  GaussianRat operator-() const { return GaussianRat(-re_, -im_); }
  GaussianRat& operator+=(const GaussianRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRat& operator-=(const GaussianRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRat& operator*=(const GaussianRat& o) {
    Rat r = re_ * o.re_ - im_ * o.im_;
    Rat i = re_ * o.im_ + im_ * o.re_;
    re_ = r;
    im_ = i;
    return *this;
  }
  GaussianRat& operator/=(const GaussianRat& o) { return *this *= o.inverse(); }

  friend GaussianRat operator+(GaussianRat a, const GaussianRat& b) { return a += b; }
  friend GaussianRat operator-(GaussianRat a, const GaussianRat& b) { return a -= b; }
  friend GaussianRat operator*(GaussianRat a, const GaussianRat& b) { return a *= b; }
  friend GaussianRat operator/(GaussianRat a, const GaussianRat& b) { return a /= b; }
  friend bool operator==(const GaussianRat& a, const GaussianRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRat& a, const GaussianRat& b) { return !(a == b); }

  GaussianRat inverse() const {
    require(!is_zero(), "inverse of zero");
    Rat n = norm();
    return GaussianRat(re_ / n, -im_ / n);
  }

  std::string str() const;

 private:
  Rat re_, im_;
};

inline GaussianRat inv(const GaussianRat& x) { return x.inverse(); }

}  // namespace kt

namespace Eigen {
template <>
struct NumTraits<kt::GaussianRat> : GenericNumTraits<kt::GaussianRat> {
  typedef kt::GaussianRat Real;
  typedef kt::GaussianRat NonInteger;
  typedef kt::GaussianRat Nested;
  typedef kt::GaussianRat Literal;
  enum {
    IsComplex = 0,  // conjugation handled explicitly
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 64
  };
  static inline Real epsilon() { return kt::GaussianRat(0); }
  static inline Real dummy_precision() { return kt::GaussianRat(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace kt {

std::ostream& operator<<(std::ostream& os, const GaussianRat& x);

using GaussMatrix = DenseMatrix<GaussianRat>;
using GaussVector = DenseVector<GaussianRat>;

GaussMatrix conj_matrix(const GaussMatrix& m);
GaussVector conj_vector(const GaussVector& v);

/// Z-graded space over the Gaussian-rational model of C with a
/// conjugate-semilinear automorphism per graded piece: alpha(v) = M conj(v).
/// The defining constraint is alpha^2 = (-1)^m on the degree-m piece.
struct GradedSemilinearSpace {
  std::map<int, GaussMatrix> alpha;  // degree -> matrix of alpha

  int dim(int degree) const {
    auto it = alpha.find(degree);
    return it == alpha.end() ? 0 : static_cast<int>(it->second.rows());
  }
  int total_dim() const;
};

struct GradedValidation {
  bool ok = false;
  std::string violation;
};

/// alpha must preserve each graded piece (structural) and alpha^2 must act
/// on degree m as (-1)^m, i.e. M conj(M) = (-1)^m I exactly.
GradedValidation validate_graded(const GradedSemilinearSpace& s);

/// H^2(Gal(C/R), C^x) = R/R_{>0} = {+1, -1}: the sign of a nonzero
/// rational; -1 is the class of the nontrivial extension.
int h2_real_class(const Rat& x);

/// Degrees add; alpha is the tensor of the factors, block per bidegree.
GradedSemilinearSpace tensor_graded(const GradedSemilinearSpace& a,
                                    const GradedSemilinearSpace& b);

/// A simple summand: one alpha-real line in even degree, one plane
/// <v, alpha(v)> in odd degree.
struct GradedSummand {
  int degree = 0;
  GaussMatrix basis;  // columns within the degree-m piece
};

/// Splits a valid space into simple summands (dimension 1 in even degree,
/// 2 in odd degree). The summand bases per degree concatenate to a basis.
std::vector<GradedSummand> decompose_graded(const GradedSemilinearSpace& s);

}  // namespace kt
