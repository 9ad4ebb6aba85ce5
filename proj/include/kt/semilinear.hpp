#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kt/laurent.hpp"
#include "kt/linalg.hpp"
#include "kt/newton.hpp"
#include "kt/rat.hpp"

namespace kt {

/// Coefficient field at level n over the base F_q = F_{p^k}, i.e. F_{q^n}.
FqField level_field(const FqField& base, int n);

/// The unramified degree-n extension with its normalized fundamental-class
/// cocycle: c(sigma^i, sigma^j) = 1 when i + j < n and pi otherwise.
struct UnramifiedExtensionModel {
  FqField base;
  int n = 1;

  LaurentPoly cocycle(int i, int j) const;
  /// x = d(sigma)^n accumulated through the cocycle; pi for n >= 2, 1 for n = 1.
  LaurentPoly section_power() const;
};

/// Builds the model and verifies the 2-cocycle identity over all triples.
UnramifiedExtensionModel build_unramified_extension(const FqField& base, int n);

/// sigma-linear automorphism v -> A sigma(v) of a free module over
/// F_{q^n}[pi, 1/pi]; sigma is the q-power Frobenius on coefficients and
/// fixes pi. Invertibility over the localized ring (monomial determinant)
/// is enforced at construction.
struct SemilinearOp {
  FqField base;  // F_q
  int n = 1;     // entries live over level_field(base, n)
  DenseMatrix<LaurentPoly> mat;

  int dim() const { return static_cast<int>(mat.rows()); }
  const FqField& coeff_field() const { return cfg_; }

  friend SemilinearOp make_semilinear(const FqField& base, int n,
                                      DenseMatrix<LaurentPoly> mat);

 private:
  FqField cfg_;  // cached level field
};

SemilinearOp make_semilinear(const FqField& base, int n, DenseMatrix<LaurentPoly> mat);

/// Entry-wise sigma^i on a matrix over the level field.
DenseMatrix<LaurentPoly> sigma_matrix(const FqField& base, const DenseMatrix<LaurentPoly>& m,
                                      int i = 1);

/// A sigma(A) sigma^2(A) ... sigma^{n-1}(A): the matrix of op^n, which is linear.
DenseMatrix<LaurentPoly> linearize(const SemilinearOp& op);

/// Apply the operator to a coordinate vector: A sigma(v).
DenseVector<LaurentPoly> apply_op(const SemilinearOp& op, const DenseVector<LaurentPoly>& v);

/// Newton slopes of the characteristic polynomial of linearize(op), divided
/// by the level.
SlopeDatum newton_slopes(const SemilinearOp& op);

/// Simple object E_{s/r}: r x r cyclic matrix with ones on the subdiagonal
/// and pi^s in the top-right corner, at level r. Requires gcd(s, r) = 1.
SemilinearOp standard_simple(const FqField& base, long long s, int r);

/// Cyclic model V_{m,n} (no coprimality requirement).
SemilinearOp isoclinic_model(const FqField& base, long long m, int n);

/// Reinterpret entries at a higher level N (n | N).
SemilinearOp embed_level(const SemilinearOp& op, int N);

SemilinearOp direct_sum(const SemilinearOp& a, const SemilinearOp& b);
SemilinearOp tensor(const SemilinearOp& a, const SemilinearOp& b);

/// Local invariant of the endomorphism algebra of a slope-s simple object.
QmodZ end_invariant(const Rat& slope);

/// Representation of the level-n Kottwitz extension: integer grading plus
/// the matrix of the Frobenius section.
struct KottwitzRep {
  FqField base;
  int n = 1;
  std::vector<long long> weights;
  DenseMatrix<LaurentPoly> frob;
};

struct RepValidation {
  bool ok = false;
  std::string violation;   // empty when ok
  SlopeDatum weights;      // the weight multiset, as integral slopes
};

/// Checks the cocycle condition in its linearized form: Phi^n must act on
/// each weight-m subspace as multiplication by pi^m.
RepValidation validate_representation(const KottwitzRep& rep);

/// Forgets the grading: (V, Phi) -> (V x F-hat, Phi x sigma). Requires a
/// valid representation; the result has Newton slopes {m_i / n}.
SemilinearOp rep_to_isocrystal(const KottwitzRep& rep);

/// Composition with the level map for n -> n*k: weights scale by k, the
/// matrix is reinterpreted at the higher level. Newton slopes are unchanged.
KottwitzRep inflate_rep(const KottwitzRep& rep, int k);

/// One invariant subspace of the cyclic model V_{m,n} under
/// Phi^{n/d} / pi^{m/d}, spanned by columns over F_{q^n}[pi, 1/pi].
struct IsoclinicBlock {
  DenseMatrix<LaurentPoly> basis;  // n rows, n/d columns
};

/// The d = gcd(m, n) invariant subspaces of V_{m,n} built from
/// (Phi^{n/d} - pi^{m/d}) Psi applied to a basis of F_{q^n} over F_{q^{n/d}};
/// the i-th block is spanned by Phi^j(Psi(a_i v)), j = 0..n/d-1.
std::vector<IsoclinicBlock> decompose_isoclinic(const FqField& base, long long m, int n);

/// Matrix of op restricted to the span of the given basis columns, solved
/// over the fraction field; throws if the subspace is not invariant or the
/// restriction leaves the Laurent ring.
SemilinearOp restrict_to_basis(const SemilinearOp& op, const DenseMatrix<LaurentPoly>& basis);

/// Dimension over F = F_q((pi)) of {T : T A = B sigma(T)}, computed by
/// exact truncation to a Laurent window that widens until the dimension
/// increments stabilize twice. windowRadius 0 picks the automatic bound.
long long hom_space_dim(const SemilinearOp& a, const SemilinearOp& b,
                        long long windowRadius = 0);

}  // namespace kt
