#include "kt/rat.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

namespace kt {

namespace {

using I128 = __int128;

long long checked_ll(I128 v, const char* ctx) {
  if (v > INT64_MAX || v < INT64_MIN + 1)
    throw ValidationError(std::string("rational overflow in ") + ctx);
  return static_cast<long long>(v);
}

I128 gcd128(I128 a, I128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    I128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

long long gcd_ll(long long a, long long b) {
  return static_cast<long long>(gcd128(a, b));
}

long long lcm_ll(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  I128 g = gcd128(a, b);
  return checked_ll((I128(a) / g) * I128(b) < 0 ? -((I128(a) / g) * I128(b))
                                                : (I128(a) / g) * I128(b),
                    "lcm");
}

Rat::Rat(long long num, long long den) : num_(num), den_(den) {
  require(den != 0, "rational with zero denominator");
  normalize();
}

void Rat::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  long long g = gcd_ll(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rat Rat::operator-() const {
  Rat r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  I128 n = I128(num_) * o.den_ + I128(o.num_) * den_;
  I128 d = I128(den_) * o.den_;
  I128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = checked_ll(n, "add");
  den_ = checked_ll(d, "add");
  if (num_ == 0) den_ = 1;
  return *this;
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat& Rat::operator*=(const Rat& o) {
  I128 n = I128(num_) * o.num_;
  I128 d = I128(den_) * o.den_;
  I128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = checked_ll(n, "mul");
  den_ = checked_ll(d, "mul");
  if (num_ == 0) den_ = 1;
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  require(!o.is_zero(), "division by zero rational");
  I128 n = I128(num_) * o.den_;
  I128 d = I128(den_) * o.num_;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  I128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = checked_ll(n, "div");
  den_ = checked_ll(d, "div");
  if (num_ == 0) den_ = 1;
  return *this;
}

bool operator<(const Rat& a, const Rat& b) {
  return I128(a.num_) * b.den_ < I128(b.num_) * a.den_;
}

long long Rat::floor() const {
  long long q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::string Rat::str() const {
  std::ostringstream os;
  os << num_ << '/' << den_;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.num() << '/' << r.den();
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    long long n = std::stoll(s.substr(0, slash));
    long long d = std::stoll(s.substr(slash + 1));
    return Rat(n, d);
  } catch (const std::invalid_argument&) {
    throw ValidationError("cannot parse rational: " + s);
  } catch (const std::out_of_range&) {
    throw ValidationError("rational out of range: " + s);
  }
}

QmodZ::QmodZ(const Rat& r) {
  long long f = r.floor();
  value_ = r - Rat(f);
}

std::string QmodZ::str() const { return value_.str(); }

std::ostream& operator<<(std::ostream& os, const QmodZ& q) {
  return os << q.value();
}

}  // namespace kt
