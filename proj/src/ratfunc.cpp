#include "kt/ratfunc.hpp"

#include <ostream>
#include <sstream>

namespace kt {

RatFunc::RatFunc(FqField cfg, FqPoly num, FqPoly den)
    : cfg_(std::move(cfg)), num_(std::move(num)), den_(std::move(den)) {
  require(cfg_ != nullptr, "null field config");
  require(!den_.is_zero(), "zero denominator");
  num_ = bind_poly(num_, cfg_);
  den_ = bind_poly(den_, cfg_);
  normalize();
}

RatFunc::RatFunc(FqField cfg, FqPoly num)
    : RatFunc(std::move(cfg), std::move(num), FqPoly::one()) {}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = cfg_ ? bind_poly(FqPoly::one(), cfg_) : FqPoly::one();
    return;
  }
  if (!cfg_) return;  // literal arithmetic stays in Z
  FqPoly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  FqElem lcInv = den_.lead().inverse();
  num_ = lcInv * num_;
  den_ = lcInv * den_;
}

RatFunc RatFunc::bind(const FqField& cfg) const {
  if (cfg_) {
    require(cfg_ == cfg, "mixing rational functions over different fields");
    return *this;
  }
  return RatFunc(cfg, bind_poly(num_, cfg), bind_poly(den_, cfg));
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (!cfg_ && !o.cfg_) {
    num_ = num_ + o.num_;  // literal integers: den == 1 on both sides
    return *this;
  }
  if (!cfg_) *this = bind(o.cfg_);
  RatFunc rhs = o.bind(cfg_);
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (!cfg_ && !o.cfg_) {
    num_ = num_ * o.num_;
    return *this;
  }
  if (!cfg_) *this = bind(o.cfg_);
  RatFunc rhs = o.bind(cfg_);
  num_ = num_ * rhs.num_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (!a.cfg_ && !b.cfg_) return a.num_ == b.num_;
  if (!a.cfg_) return a.bind(b.cfg_) == b;
  if (!b.cfg_) return a == b.bind(a.cfg_);
  require(a.cfg_ == b.cfg_, "comparing rational functions over different fields");
  return a.num_ == b.num_ && a.den_ == b.den_;
}

RatFunc RatFunc::inverse() const {
  require(!is_zero(), "inverse of zero rational function");
  if (!cfg_) {
    const FqPoly& n = num_;
    require(n.degree() == 0, "inverse of unbound non-constant literal");
    FqElem c = n.coeff(0);
    require(c.literal() == 1 || c.literal() == -1, "inverse of unbound literal");
    return *this;
  }
  RatFunc r;
  r.cfg_ = cfg_;
  r.num_ = den_;
  r.den_ = num_;
  r.normalize();
  return r;
}

RatFunc RatFunc::frobenius(int i) const {
  if (!cfg_) return *this;
  auto lift = [&](const FqPoly& f) {
    std::vector<FqElem> c;
    c.reserve(f.degree() + 1);
    for (int j = 0; j <= f.degree(); ++j) c.push_back(f.coeff(j).frobenius(i));
    return FqPoly(std::move(c));
  };
  RatFunc r;
  r.cfg_ = cfg_;
  r.num_ = lift(num_);
  r.den_ = lift(den_);
  r.normalize();
  return r;
}

std::string RatFunc::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

namespace {

void print_poly(std::ostream& os, const FqPoly& f) {
  if (f.is_zero()) {
    os << '0';
    return;
  }
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    if (f.coeff(i).is_zero()) continue;
    if (!first) os << " + ";
    os << f.coeff(i);
    if (i == 1) os << "*t";
    if (i > 1) os << "*t^" << i;
    first = false;
  }
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const RatFunc& f) {
  os << '(';
  print_poly(os, f.num());
  os << ")/(";
  print_poly(os, f.den());
  return os << ')';
}

// --- places -----------------------------------------------------------------

std::string PlaceId::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

bool operator==(const PlaceId& a, const PlaceId& b) {
  if (a.infinite != b.infinite) return false;
  if (a.infinite) return true;
  return a.poly == b.poly;
}

bool operator!=(const PlaceId& a, const PlaceId& b) { return !(a == b); }

bool operator<(const PlaceId& a, const PlaceId& b) {
  if (a.infinite != b.infinite) return b.infinite;  // finite places first
  if (a.infinite) return false;
  if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
  for (int i = a.poly.degree(); i >= 0; --i) {
    std::vector<long long> ca = a.poly.coeff(i).coeffs();
    std::vector<long long> cb = b.poly.coeff(i).coeffs();
    if (ca != cb) return ca < cb;
  }
  return false;
}

std::ostream& operator<<(std::ostream& os, const PlaceId& v) {
  if (v.infinite) return os << "inf";
  os << '(';
  print_poly(os, v.poly);
  return os << ')';
}

void validate_place(const PlaceId& v, const FqField& cfg) {
  if (v.infinite) return;
  require(v.poly.degree() >= 1, "finite place must have positive degree");
  require(bind_poly(v.poly, cfg).is_monic(), "place polynomial must be monic");
  require(is_irreducible(v.poly, cfg), "place polynomial must be irreducible");
}

long long ratfunc_valuation(const RatFunc& f, const PlaceId& v) {
  require(!f.is_zero(), "valuation of zero");
  require(f.bound(), "valuation of unbound literal");
  if (v.infinite) return f.den().degree() - f.num().degree();
  FqPoly pv = bind_poly(v.poly, f.field());
  auto mult = [&](FqPoly g) {
    long long m = 0;
    while (true) {
      auto [q, r] = divmod(g, pv);
      if (!r.is_zero()) break;
      ++m;
      g = q;
    }
    return m;
  };
  return mult(f.num()) - mult(f.den());
}

std::map<PlaceId, long long> ratfunc_divisor(const RatFunc& f, std::uint64_t seed) {
  require(!f.is_zero(), "divisor of zero");
  require(f.bound(), "divisor of unbound literal");
  std::map<PlaceId, long long> div;
  auto add = [&](const FqPoly& g, long long scale) {
    auto res = poly_factor(g, f.field(), seed);
    for (const auto& [irr, mult] : res.factors) {
      PlaceId v = PlaceId::finite(irr);
      div[v] += scale * mult;
      if (div[v] == 0) div.erase(v);
    }
  };
  if (f.num().degree() > 0) add(f.num(), 1);
  if (f.den().degree() > 0) add(f.den(), -1);
  long long atInf = f.den().degree() - f.num().degree();
  if (atInf != 0) div[PlaceId::infinity()] = atInf;
  return div;
}

}  // namespace kt
