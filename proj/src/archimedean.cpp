#include "kt/archimedean.hpp"

#include <ostream>
#include <sstream>

#include "kt/linalg.hpp"

namespace kt {

std::string GaussianRat::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRat& x) {
  return os << x.real() << (x.imag() < Rat(0) ? "-" : "+")
            << (x.imag() < Rat(0) ? -x.imag() : x.imag()) << "i";
}

GaussMatrix conj_matrix(const GaussMatrix& m) {
  GaussMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).conj();
  return r;
}

GaussVector conj_vector(const GaussVector& v) {
  GaussVector r(v.rows());
  for (int i = 0; i < v.rows(); ++i) r(i) = v(i).conj();
  return r;
}

int GradedSemilinearSpace::total_dim() const {
  int t = 0;
  for (const auto& [m, mat] : alpha) t += static_cast<int>(mat.rows());
  return t;
}

GradedValidation validate_graded(const GradedSemilinearSpace& s) {
  GradedValidation out;
  for (const auto& [m, mat] : s.alpha) {
    if (mat.rows() != mat.cols() || mat.rows() == 0) {
      out.violation = "alpha block in degree " + std::to_string(m) + " is not square";
      return out;
    }
    // alpha must be invertible and alpha^2 = (-1)^m
    GaussMatrix sq = mat * conj_matrix(mat);
    GaussianRat want = (m % 2 == 0) ? GaussianRat(1) : GaussianRat(-1);
    for (int i = 0; i < sq.rows(); ++i)
      for (int j = 0; j < sq.cols(); ++j) {
        GaussianRat expect = i == j ? want : GaussianRat(0);
        if (!(sq(i, j) == expect)) {
          std::ostringstream os;
          os << "alpha^2 differs from (-1)^m in degree " << m << " at entry (" << i
             << "," << j << ")";
          out.violation = os.str();
          return out;
        }
      }
  }
  out.ok = true;
  return out;
}

int h2_real_class(const Rat& x) {
  require(!x.is_zero(), "class of zero is undefined");
  return x < Rat(0) ? -1 : 1;
}

GradedSemilinearSpace tensor_graded(const GradedSemilinearSpace& a,
                                    const GradedSemilinearSpace& b) {
  GradedValidation va = validate_graded(a);
  require(va.ok, "left factor invalid: " + va.violation);
  GradedValidation vb = validate_graded(b);
  require(vb.ok, "right factor invalid: " + vb.violation);
  // collect kronecker blocks per total degree
  std::map<int, std::vector<GaussMatrix>> blocks;
  for (const auto& [m1, mat1] : a.alpha)
    for (const auto& [m2, mat2] : b.alpha)
      blocks[m1 + m2].push_back(kron<GaussianRat>(mat1, mat2));
  GradedSemilinearSpace out;
  for (auto& [m, bs] : blocks) {
    int n = 0;
    for (const auto& blk : bs) n += static_cast<int>(blk.rows());
    GaussMatrix mat(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) mat(i, j) = GaussianRat(0);
    int at = 0;
    for (const auto& blk : bs) {
      mat.block(at, at, blk.rows(), blk.cols()) = blk;
      at += static_cast<int>(blk.rows());
    }
    out.alpha[m] = std::move(mat);
  }
  return out;
}

std::vector<GradedSummand> decompose_graded(const GradedSemilinearSpace& s) {
  GradedValidation v = validate_graded(s);
  require(v.ok, "cannot decompose an invalid space: " + v.violation);
  std::vector<GradedSummand> out;
  for (const auto& [m, mat] : s.alpha) {
    const int d = static_cast<int>(mat.rows());
    if (m % 2 == 0) {
      // alpha is an antilinear involution; fixed vectors v + alpha(v) and
      // i(v - alpha(v)) span, pick d independent ones
      GaussMatrix chosen(d, d);
      int have = 0;
      auto try_add = [&](const GaussVector& u) {
        if (have == d) return;
        bool zero = true;
        for (int i = 0; i < d; ++i)
          if (!u(i).is_zero()) zero = false;
        if (zero) return;
        GaussMatrix cand(d, have + 1);
        for (int c = 0; c < have; ++c) cand.col(c) = chosen.col(c);
        cand.col(have) = u;
        if (rank_of<GaussianRat>(cand) == have + 1) {
          chosen.col(have) = u;
          ++have;
        }
      };
      for (int j = 0; j < d && have < d; ++j) {
        GaussVector e(d);
        for (int i = 0; i < d; ++i) e(i) = GaussianRat(i == j ? 1 : 0);
        GaussVector alphaE = mat * conj_vector(e);
        GaussVector u1 = e + alphaE;
        GaussVector u2(d);
        for (int i = 0; i < d; ++i) u2(i) = GaussianRat::i() * (e(i) - alphaE(i));
        try_add(u1);
        try_add(u2);
      }
      internal_check(have == d, "fixed vectors failed to span an even-degree piece");
      for (int c = 0; c < d; ++c) {
        GradedSummand sm;
        sm.degree = m;
        sm.basis = chosen.col(c);
        out.push_back(std::move(sm));
      }
    } else {
      // quaternionic: no alpha-stable line; planes <v, alpha(v)> exhaust
      GaussMatrix used(d, 0);
      while (used.cols() < d) {
        int filled = static_cast<int>(used.cols());
        GaussVector v0(d);
        bool found = false;
        for (int j = 0; j < d && !found; ++j) {
          GaussVector e(d);
          for (int i = 0; i < d; ++i) e(i) = GaussianRat(i == j ? 1 : 0);
          GaussMatrix cand(d, filled + 1);
          for (int c = 0; c < filled; ++c) cand.col(c) = used.col(c);
          cand.col(filled) = e;
          if (rank_of<GaussianRat>(cand) == filled + 1) {
            v0 = e;
            found = true;
          }
        }
        internal_check(found, "no vector outside the accumulated span");
        GaussVector av = mat * conj_vector(v0);
        GradedSummand sm;
        sm.degree = m;
        sm.basis = GaussMatrix(d, 2);
        sm.basis.col(0) = v0;
        sm.basis.col(1) = av;
        out.push_back(std::move(sm));
        GaussMatrix next(d, filled + 2);
        for (int c = 0; c < filled; ++c) next.col(c) = used.col(c);
        next.col(filled) = v0;
        next.col(filled + 1) = av;
        internal_check(rank_of<GaussianRat>(next) == filled + 2,
                       "plane basis failed to extend independently");
        used = std::move(next);
      }
      // note: d odd cannot pass validation in odd degree (|det|^2 = -1 has no
      // solution), so the 2-column planes always exhaust the piece
    }
  }
  return out;
}

}  // namespace kt
