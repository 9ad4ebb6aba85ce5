#include "kt/semilinear.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace kt {

FqField level_field(const FqField& base, int n) {
  require(n >= 1, "level must be positive");
  return fq_field(base->p, base->k * n);
}

// --- unramified extension model --------------------------------------------

LaurentPoly UnramifiedExtensionModel::cocycle(int i, int j) const {
  internal_check(i >= 0 && i < n && j >= 0 && j < n, "cocycle index out of range");
  FqField cfg = level_field(base, n);
  return (i + j >= n) ? LaurentPoly::pi(cfg) : LaurentPoly::one(cfg);
}

LaurentPoly UnramifiedExtensionModel::section_power() const {
  FqField cfg = level_field(base, n);
  LaurentPoly x = LaurentPoly::one(cfg);
  for (int j = 1; j < n; ++j) x *= cocycle(j, 1);
  return x;
}

UnramifiedExtensionModel build_unramified_extension(const FqField& base, int n) {
  require(n >= 1, "extension degree must be positive");
  UnramifiedExtensionModel m{base, n};
  // 2-cocycle identity c(i,j) c(i+j,l) = sigma^i(c(j,l)) c(i,j+l); sigma
  // fixes pi, so the twist is invisible here. Checked exhaustively.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        LaurentPoly lhs = m.cocycle(i, j) * m.cocycle((i + j) % n, l);
        LaurentPoly rhs = m.cocycle(j, l).frobenius(base->k * i) * m.cocycle(i, (j + l) % n);
        internal_check(lhs == rhs, "cocycle identity violated");
      }
  return m;
}

// --- semilinear operators ---------------------------------------------------

namespace {

DenseMatrix<LaurentPoly> bind_matrix(const DenseMatrix<LaurentPoly>& m, const FqField& cfg) {
  DenseMatrix<LaurentPoly> r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).bind(cfg);
  return r;
}

}  // namespace

SemilinearOp make_semilinear(const FqField& base, int n, DenseMatrix<LaurentPoly> mat) {
  require(n >= 1, "level must be positive");
  require(mat.rows() == mat.cols(), "operator matrix must be square");
  require(mat.rows() >= 1, "operator needs positive dimension");
  SemilinearOp op;
  op.base = base;
  op.n = n;
  op.cfg_ = level_field(base, n);
  op.mat = bind_matrix(mat, op.cfg_);
  LaurentPoly det = det_ring<LaurentPoly>(op.mat, LaurentPoly::zero(op.cfg_),
                                          LaurentPoly::one(op.cfg_));
  require(!det.is_zero() && det.is_monomial(),
          "matrix is not invertible over the Laurent ring localized at pi");
  return op;
}

DenseMatrix<LaurentPoly> sigma_matrix(const FqField& base, const DenseMatrix<LaurentPoly>& m,
                                      int i) {
  DenseMatrix<LaurentPoly> r(m.rows(), m.cols());
  for (int a = 0; a < m.rows(); ++a)
    for (int b = 0; b < m.cols(); ++b) r(a, b) = m(a, b).frobenius(base->k * i);
  return r;
}

DenseMatrix<LaurentPoly> linearize(const SemilinearOp& op) {
  DenseMatrix<LaurentPoly> m = op.mat;
  DenseMatrix<LaurentPoly> twisted = op.mat;
  for (int i = 1; i < op.n; ++i) {
    twisted = sigma_matrix(op.base, twisted, 1);
    m = m * twisted;
  }
  return m;
}

DenseVector<LaurentPoly> apply_op(const SemilinearOp& op, const DenseVector<LaurentPoly>& v) {
  DenseVector<LaurentPoly> s(v.rows());
  for (int i = 0; i < v.rows(); ++i) s(i) = v(i).frobenius(op.base->k);
  return op.mat * s;
}

SlopeDatum newton_slopes(const SemilinearOp& op) {
  FqField cfg = op.coeff_field();
  DenseMatrix<LaurentPoly> m = linearize(op);
  auto cp = charpoly_ring<LaurentPoly>(m, LaurentPoly::zero(cfg), LaurentPoly::one(cfg));
  std::vector<NewtonPoint> pts;
  for (size_t i = 0; i < cp.size(); ++i) {
    if (cp[i].is_zero())
      pts.push_back(NewtonPoint::infinite(static_cast<long long>(i)));
    else
      pts.push_back(NewtonPoint::at(static_cast<long long>(i), cp[i].order()));
  }
  SlopeDatum raw = newton_polygon(pts);
  SlopeDatum out;
  for (const auto& e : raw.entries) out.add(e.slope / Rat(op.n), e.mult);
  internal_check(out.total_multiplicity() == op.dim(), "slope multiplicities must cover the dimension");
  return out;
}

namespace {

DenseMatrix<LaurentPoly> cyclic_matrix(const FqField& cfg, long long cornerPower, int r) {
  DenseMatrix<LaurentPoly> m(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m(i, j) = LaurentPoly::zero(cfg);
  for (int j = 0; j + 1 < r; ++j) m(j + 1, j) = LaurentPoly::one(cfg);
  m(0, r - 1) = LaurentPoly::pi(cfg, cornerPower);
  return m;
}

}  // namespace

SemilinearOp standard_simple(const FqField& base, long long s, int r) {
  require(r >= 1, "rank must be positive");
  require(gcd_ll(s, r) == 1, "standard simple requires coprime slope data");
  return make_semilinear(base, r, cyclic_matrix(level_field(base, r), s, r));
}

SemilinearOp isoclinic_model(const FqField& base, long long m, int n) {
  require(n >= 1, "level must be positive");
  return make_semilinear(base, n, cyclic_matrix(level_field(base, n), m, n));
}

SemilinearOp embed_level(const SemilinearOp& op, int N) {
  require(N % op.n == 0, "target level must be a multiple of the current level");
  if (N == op.n) return op;
  FqField src = op.coeff_field();
  FqField dst = level_field(op.base, N);
  const FqEmbedding& emb = fq_embedding(src, dst);
  DenseMatrix<LaurentPoly> m(op.dim(), op.dim());
  for (int i = 0; i < op.dim(); ++i)
    for (int j = 0; j < op.dim(); ++j) {
      const LaurentPoly& e = op.mat(i, j);
      if (e.is_zero()) {
        m(i, j) = LaurentPoly::zero(dst);
        continue;
      }
      std::vector<FqElem> c;
      for (long long d = e.min_deg(); d <= e.max_deg(); ++d) c.push_back(emb(e.coeff(d)));
      m(i, j) = LaurentPoly(dst, e.min_deg(), std::move(c));
    }
  return make_semilinear(op.base, N, std::move(m));
}

SemilinearOp direct_sum(const SemilinearOp& a, const SemilinearOp& b) {
  require(a.base == b.base, "direct sum requires a common base field");
  int L = static_cast<int>(lcm_ll(a.n, b.n));
  SemilinearOp ea = embed_level(a, L), eb = embed_level(b, L);
  FqField cfg = ea.coeff_field();
  int n = ea.dim() + eb.dim();
  DenseMatrix<LaurentPoly> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = LaurentPoly::zero(cfg);
  m.block(0, 0, ea.dim(), ea.dim()) = ea.mat;
  m.block(ea.dim(), ea.dim(), eb.dim(), eb.dim()) = eb.mat;
  return make_semilinear(a.base, L, std::move(m));
}

SemilinearOp tensor(const SemilinearOp& a, const SemilinearOp& b) {
  require(a.base == b.base, "tensor requires a common base field");
  int L = static_cast<int>(lcm_ll(a.n, b.n));
  SemilinearOp ea = embed_level(a, L), eb = embed_level(b, L);
  return make_semilinear(a.base, L, kron<LaurentPoly>(ea.mat, eb.mat));
}

QmodZ end_invariant(const Rat& slope) { return qmodz(-slope); }

// --- representations --------------------------------------------------------

RepValidation validate_representation(const KottwitzRep& rep) {
  RepValidation out;
  require(rep.n >= 1, "level must be positive");
  require(rep.frob.rows() == rep.frob.cols(), "frobMatrix must be square");
  require(static_cast<size_t>(rep.frob.rows()) == rep.weights.size(),
          "weight vector length must match the matrix dimension");
  FqField cfg = level_field(rep.base, rep.n);
  DenseMatrix<LaurentPoly> frob = bind_matrix(rep.frob, cfg);
  LaurentPoly det =
      det_ring<LaurentPoly>(frob, LaurentPoly::zero(cfg), LaurentPoly::one(cfg));
  if (det.is_zero() || !det.is_monomial()) {
    out.violation = "frobMatrix is not invertible over the Laurent ring localized at pi";
    return out;
  }
  SemilinearOp op = make_semilinear(rep.base, rep.n, frob);
  DenseMatrix<LaurentPoly> m = linearize(op);
  const int dim = op.dim();
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      LaurentPoly expect = (i == j) ? LaurentPoly::pi(cfg, rep.weights[i])
                                    : LaurentPoly::zero(cfg);
      if (!(m(i, j) == expect)) {
        std::ostringstream os;
        os << "Phi^n does not act as pi^m on the weight grading: entry (" << i << ","
           << j << ") is " << m(i, j) << ", expected " << expect;
        out.violation = os.str();
        return out;
      }
    }
  out.ok = true;
  for (long long w : rep.weights) out.weights.add(Rat(w), 1);
  return out;
}

SemilinearOp rep_to_isocrystal(const KottwitzRep& rep) {
  RepValidation v = validate_representation(rep);
  require(v.ok, "invalid representation: " + v.violation);
  return make_semilinear(rep.base, rep.n, rep.frob);
}

KottwitzRep inflate_rep(const KottwitzRep& rep, int k) {
  require(k >= 1, "inflation factor must be positive");
  SemilinearOp op = make_semilinear(rep.base, rep.n, rep.frob);
  SemilinearOp up = embed_level(op, rep.n * k);
  KottwitzRep out;
  out.base = rep.base;
  out.n = rep.n * k;
  out.frob = up.mat;
  for (long long w : rep.weights) out.weights.push_back(w * k);
  return out;
}

// --- isoclinic decomposition -------------------------------------------------

std::vector<IsoclinicBlock> decompose_isoclinic(const FqField& base, long long m, int n) {
  require(n >= 1, "level must be positive");
  const long long d = (m == 0) ? n : gcd_ll(m, n);
  const long long r = n / d;
  FqField cfg = level_field(base, n);
  SemilinearOp op = isoclinic_model(base, m, n);

  // power basis of F_{q^n} over F_{q^{n/d}}: 1, g, ..., g^{d-1}
  FqElem g = FqElem::gen(cfg);
  std::vector<IsoclinicBlock> blocks;
  for (long long i = 0; i < d; ++i) {
    FqElem a = g.pow(i);
    // Psi(a v) = sum_j pi^{(m/d) j} sigma^{r(d-1-j)}(a) e_{r(d-1-j)}
    DenseVector<LaurentPoly> w(n);
    for (int c = 0; c < n; ++c) w(c) = LaurentPoly::zero(cfg);
    for (long long j = 0; j < d; ++j) {
      long long pos = r * (d - 1 - j);
      FqElem coeff = a.frobenius(static_cast<int>(base->k * pos));
      w(static_cast<int>(pos)) += LaurentPoly::monomial(cfg, coeff, (m / d) * j);
    }
    IsoclinicBlock blk;
    blk.basis = DenseMatrix<LaurentPoly>(n, static_cast<int>(r));
    for (long long t = 0; t < r; ++t) {
      blk.basis.col(static_cast<int>(t)) = w;
      if (t + 1 < r) w = apply_op(op, w);
    }
    blocks.push_back(std::move(blk));
  }
  return blocks;
}

namespace {

RatFunc laurent_to_ratfunc(const LaurentPoly& x, const FqField& cfg) {
  if (x.is_zero()) return RatFunc(0).bind(cfg);
  return x.as_ratfunc();
}

}  // namespace

SemilinearOp restrict_to_basis(const SemilinearOp& op, const DenseMatrix<LaurentPoly>& basis) {
  FqField cfg = op.coeff_field();
  const int n = op.dim();
  const int w = static_cast<int>(basis.cols());
  require(static_cast<int>(basis.rows()) == n, "basis rows must match the ambient dimension");
  DenseMatrix<RatFunc> b(n, w);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < w; ++j) b(i, j) = laurent_to_ratfunc(basis(i, j), cfg);
  require(rank_of<RatFunc>(b) == w, "basis columns are dependent");

  DenseMatrix<LaurentPoly> r(w, w);
  for (int j = 0; j < w; ++j) {
    DenseVector<LaurentPoly> img = apply_op(op, basis.col(j));
    DenseVector<RatFunc> rhs(n);
    for (int i = 0; i < n; ++i) rhs(i) = laurent_to_ratfunc(img(i), cfg);
    auto x = solve_linear<RatFunc>(b, rhs);
    require(x.has_value(), "subspace is not invariant under the operator");
    for (int i = 0; i < w; ++i) r(i, j) = LaurentPoly::from_ratfunc((*x)(i));
  }
  return make_semilinear(op.base, op.n, std::move(r));
}

// --- hom spaces ---------------------------------------------------------------

namespace {

struct CoordContext {
  FqField cfg;          // level field
  int K;                // F_p dimension of the level field
  long long p;
  std::vector<std::vector<long long>> frob;  // K x K matrix of sigma (columns)
  std::map<std::vector<long long>, std::vector<std::vector<long long>>> multCache;

  explicit CoordContext(const FqField& base, const FqField& lvl) : cfg(lvl) {
    K = lvl->k;
    p = lvl->p;
    frob.assign(K, std::vector<long long>(K, 0));
    for (int l = 0; l < K; ++l) {
      std::vector<long long> basis(K, 0);
      basis[l] = 1;
      FqElem x(lvl, std::move(basis));
      FqElem fx = x.frobenius(base->k);
      for (int row = 0; row < K; ++row) frob[row][l] = fx.coeffs()[row];
    }
  }

  const std::vector<std::vector<long long>>& mult_matrix(const FqElem& e) {
    auto it = multCache.find(e.coeffs());
    if (it != multCache.end()) return it->second;
    std::vector<std::vector<long long>> m(K, std::vector<long long>(K, 0));
    for (int l = 0; l < K; ++l) {
      std::vector<long long> basis(K, 0);
      basis[l] = 1;
      FqElem prod = e * FqElem(cfg, std::move(basis));
      for (int row = 0; row < K; ++row) m[row][l] = prod.coeffs()[row];
    }
    return multCache.emplace(e.coeffs(), std::move(m)).first->second;
  }
};

long long spread_of(const DenseMatrix<LaurentPoly>& m) {
  long long s = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero())
        s = std::max({s, std::llabs(m(i, j).min_deg()), std::llabs(m(i, j).max_deg())});
  return s;
}

// F_p dimension of {T truncated to radius W : T A = B sigma(T)}
long long truncated_kernel_dim(const DenseMatrix<LaurentPoly>& A,
                               const DenseMatrix<LaurentPoly>& B, CoordContext& ctx,
                               long long W, long long spread) {
  const int da = static_cast<int>(A.rows());
  const int db = static_cast<int>(B.rows());
  const int K = ctx.K;
  const long long slots = 2 * W + 1;
  const long long cols = static_cast<long long>(db) * da * slots * K;
  auto unknown = [&](int i, int j, long long deg, int coord) {
    long long slot = deg + W;
    return ((static_cast<long long>(i) * da + j) * slots + slot) * K + coord;
  };
  GFpKernel ker(ctx.p, static_cast<int>(cols));
  std::vector<long long> row(static_cast<size_t>(cols));
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < da; ++j)
      for (long long e = -W - spread; e <= W + spread; ++e)
        for (int coord = 0; coord < K; ++coord) {
          std::fill(row.begin(), row.end(), 0);
          bool any = false;
          // (T A)_{ij}[e] = sum_l sum_d T(i,l)[e-d] A(l,j)[d]
          for (int l = 0; l < da; ++l) {
            const LaurentPoly& a = A(l, j);
            if (a.is_zero()) continue;
            for (long long dd = a.min_deg(); dd <= a.max_deg(); ++dd) {
              FqElem c = a.coeff(dd);
              if (c.is_zero()) continue;
              long long tdeg = e - dd;
              if (tdeg < -W || tdeg > W) continue;
              const auto& mm = ctx.mult_matrix(c);
              for (int src = 0; src < K; ++src) {
                if (mm[coord][src] == 0) continue;
                row[unknown(i, l, tdeg, src)] += mm[coord][src];
                any = true;
              }
            }
          }
          // -(B sigma(T))_{ij}[e] = -sum_l sum_d B(i,l)[d] sigma(T(l,j))[e-d]
          for (int l = 0; l < db; ++l) {
            const LaurentPoly& bE = B(i, l);
            if (bE.is_zero()) continue;
            for (long long dd = bE.min_deg(); dd <= bE.max_deg(); ++dd) {
              FqElem c = bE.coeff(dd);
              if (c.is_zero()) continue;
              long long tdeg = e - dd;
              if (tdeg < -W || tdeg > W) continue;
              const auto& mm = ctx.mult_matrix(c);
              for (int mid = 0; mid < K; ++mid) {
                if (mm[coord][mid] == 0) continue;
                for (int src = 0; src < K; ++src) {
                  if (ctx.frob[mid][src] == 0) continue;
                  row[unknown(l, j, tdeg, src)] -= mm[coord][mid] * ctx.frob[mid][src];
                  any = true;
                }
              }
            }
          }
          if (any) ker.add_row(row);
        }
  return cols - ker.rank();
}

}  // namespace

long long hom_space_dim(const SemilinearOp& a, const SemilinearOp& b,
                        long long windowRadius) {
  require(a.base == b.base, "hom requires a common base field");
  int L = static_cast<int>(lcm_ll(a.n, b.n));
  SemilinearOp ea = embed_level(a, L), eb = embed_level(b, L);
  FqField lvl = ea.coeff_field();
  CoordContext ctx(a.base, lvl);

  long long spread = std::max(spread_of(ea.mat), spread_of(eb.mat));
  // lower bound from the slope spread, as the window must fit shifted copies
  // of every basis morphism
  SlopeDatum sa = newton_slopes(ea), sb = newton_slopes(eb);
  Rat lo = sa.entries.front().slope, hi = sa.entries.back().slope;
  for (const auto& e : sb.entries) {
    lo = std::min(lo, e.slope, [](const Rat& x, const Rat& y) { return x < y; });
    hi = std::max(hi, e.slope, [](const Rat& x, const Rat& y) { return x < y; });
  }
  long long slopeSpan = ((hi - lo) * Rat(L)).floor() + 1;
  long long autoRadius = std::max<long long>(4, slopeSpan + spread + ea.dim() + eb.dim());
  if (windowRadius == 0) windowRadius = autoRadius;
  require(windowRadius >= autoRadius,
          "precision window below the slope-spread lower bound");

  const long long maxRadius = 96;
  long long W = windowRadius;
  while (W <= maxRadius) {
    long long d0 = truncated_kernel_dim(ea.mat, eb.mat, ctx, W, spread);
    long long d1 = truncated_kernel_dim(ea.mat, eb.mat, ctx, W + 1, spread);
    long long d2 = truncated_kernel_dim(ea.mat, eb.mat, ctx, W + 2, spread);
    long long i1 = d1 - d0, i2 = d2 - d1;
    long long unit = 2 * a.base->k;  // F_p dims gained per radius step and F-dimension
    if (i1 == i2 && i1 % unit == 0) return i1 / unit;
    W *= 2;
  }
  throw ValidationError("hom solver window did not stabilize; precision window too small");
}

}  // namespace kt
