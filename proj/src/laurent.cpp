#include "kt/laurent.hpp"

#include <ostream>
#include <sstream>

namespace kt {

LaurentPoly::LaurentPoly(int v) {
  if (v != 0) c_.push_back(FqElem(v));
}

LaurentPoly::LaurentPoly(FqField cfg, long long minDeg, std::vector<FqElem> coeffs)
    : cfg_(std::move(cfg)), minDeg_(minDeg), c_(std::move(coeffs)) {
  require(cfg_ != nullptr, "null field config");
  for (auto& x : c_) x = x.bind(cfg_);
  normalize();
}

void LaurentPoly::normalize() {
  size_t lo = 0;
  while (lo < c_.size() && c_[lo].is_zero()) ++lo;
  size_t hi = c_.size();
  while (hi > lo && c_[hi - 1].is_zero()) --hi;
  if (lo == hi) {
    c_.clear();
    minDeg_ = 0;
    return;
  }
  minDeg_ += static_cast<long long>(lo);
  c_ = std::vector<FqElem>(c_.begin() + lo, c_.begin() + hi);
}

LaurentPoly LaurentPoly::bind(const FqField& cfg) const {
  if (cfg_) {
    require(cfg_ == cfg, "mixing Laurent polynomials over different fields");
    return *this;
  }
  std::vector<FqElem> c;
  c.reserve(c_.size());
  for (const auto& x : c_) c.push_back(x.bind(cfg));
  return LaurentPoly(cfg, minDeg_, std::move(c));
}

bool LaurentPoly::is_zero() const {
  if (cfg_) return c_.empty();
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool LaurentPoly::is_one() const {
  return c_.size() == 1 && minDeg_ == 0 && c_[0].is_one();
}

bool LaurentPoly::is_monomial() const { return c_.size() == 1; }

FqElem LaurentPoly::coeff(long long deg) const {
  long long idx = deg - minDeg_;
  if (idx < 0 || idx >= static_cast<long long>(c_.size()))
    return cfg_ ? FqElem::zero(cfg_) : FqElem(0);
  return c_[static_cast<size_t>(idx)];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (!cfg_ && !o.cfg_) {
    // both literals sit at degree 0
    FqElem a = c_.empty() ? FqElem(0) : c_[0];
    FqElem b = o.c_.empty() ? FqElem(0) : o.c_[0];
    *this = LaurentPoly(0);
    FqElem s = a + b;
    if (!s.is_zero()) c_.push_back(s);
    return *this;
  }
  if (!cfg_) *this = bind(o.cfg_);
  LaurentPoly rhs = o.bind(cfg_);
  if (rhs.c_.empty()) return *this;
  if (c_.empty()) return *this = rhs;
  long long lo = std::min(minDeg_, rhs.minDeg_);
  long long hi = std::max(max_deg(), rhs.max_deg());
  std::vector<FqElem> c(static_cast<size_t>(hi - lo + 1), FqElem::zero(cfg_));
  for (size_t i = 0; i < c_.size(); ++i) c[static_cast<size_t>(minDeg_ - lo) + i] += c_[i];
  for (size_t i = 0; i < rhs.c_.size(); ++i)
    c[static_cast<size_t>(rhs.minDeg_ - lo) + i] += rhs.c_[i];
  minDeg_ = lo;
  c_ = std::move(c);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  if (!cfg_ && !o.cfg_) {
    FqElem a = c_.empty() ? FqElem(0) : c_[0];
    FqElem b = o.c_.empty() ? FqElem(0) : o.c_[0];
    *this = LaurentPoly(0);
    FqElem s = a * b;
    if (!s.is_zero()) c_.push_back(s);
    return *this;
  }
  if (!cfg_) *this = bind(o.cfg_);
  LaurentPoly rhs = o.bind(cfg_);
  if (c_.empty() || rhs.c_.empty()) {
    c_.clear();
    minDeg_ = 0;
    return *this;
  }
  std::vector<FqElem> c(c_.size() + rhs.c_.size() - 1, FqElem::zero(cfg_));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < rhs.c_.size(); ++j) c[i + j] += c_[i] * rhs.c_[j];
  minDeg_ += rhs.minDeg_;
  c_ = std::move(c);
  normalize();
  return *this;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (!a.cfg_ && !b.cfg_) {
    FqElem x = a.c_.empty() ? FqElem(0) : a.c_[0];
    FqElem y = b.c_.empty() ? FqElem(0) : b.c_[0];
    return x == y;
  }
  if (!a.cfg_) return a.bind(b.cfg_) == b;
  if (!b.cfg_) return a == b.bind(a.cfg_);
  require(a.cfg_ == b.cfg_, "comparing Laurent polynomials over different fields");
  return a.minDeg_ == b.minDeg_ && a.c_ == b.c_;
}

LaurentPoly LaurentPoly::shifted(long long j) const {
  LaurentPoly r = *this;
  if (!r.c_.empty()) r.minDeg_ += j;
  return r;
}

LaurentPoly LaurentPoly::frobenius(int i) const {
  LaurentPoly r = *this;
  for (auto& x : r.c_) x = x.frobenius(i);
  return r;
}

LaurentPoly LaurentPoly::inverse() const {
  require(!is_zero(), "inverse of zero Laurent polynomial");
  if (!cfg_) {
    require(c_.size() == 1 &&
                (c_[0].literal() == 1 || c_[0].literal() == -1),
            "inverse of unbound literal");
    return *this;
  }
  require(is_monomial(),
          "Laurent polynomial is not a unit (inverse requires a monomial)");
  return LaurentPoly(cfg_, -minDeg_, {c_[0].inverse()});
}

RatFunc LaurentPoly::as_ratfunc() const {
  internal_check(bound(), "as_ratfunc on unbound literal");
  if (c_.empty()) return RatFunc(0).bind(cfg_);
  std::vector<FqElem> num;
  FqPoly den;
  if (minDeg_ >= 0) {
    num.assign(static_cast<size_t>(minDeg_), FqElem::zero(cfg_));
    num.insert(num.end(), c_.begin(), c_.end());
    den = FqPoly::one();
  } else {
    num.assign(c_.begin(), c_.end());
    den = FqPoly::monomial(static_cast<int>(-minDeg_), FqElem::one(cfg_));
  }
  return RatFunc(cfg_, FqPoly(std::move(num)), den);
}

LaurentPoly LaurentPoly::from_ratfunc(const RatFunc& f) {
  require(f.bound(), "from_ratfunc on unbound literal");
  const FqField& cfg = f.field();
  if (f.is_zero()) return LaurentPoly::zero(cfg);
  const FqPoly& den = f.den();
  // denominator must be c * x^j
  for (int i = 0; i < den.degree(); ++i)
    require(den.coeff(i).is_zero(),
            "rational function is not a Laurent polynomial in the uniformizer");
  long long j = den.degree();
  std::vector<FqElem> c;
  FqElem scale = den.lead().inverse();
  for (int i = 0; i <= f.num().degree(); ++i) c.push_back(f.num().coeff(i) * scale);
  return LaurentPoly(cfg, -j, std::move(c));
}

std::string LaurentPoly::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) {
  if (f.is_zero()) return os << '0';
  if (!f.bound()) return os << "lit Laurent";
  bool first = true;
  for (long long d = f.min_deg(); d <= f.max_deg(); ++d) {
    FqElem c = f.coeff(d);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    os << c;
    if (d != 0) os << "*pi^" << d;
    first = false;
  }
  return os;
}

}  // namespace kt
