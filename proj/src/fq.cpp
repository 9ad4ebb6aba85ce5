#include "kt/fq.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

namespace kt {

namespace {

long long mod_ll(long long a, long long p) {
  long long r = a % p;
  return r < 0 ? r + p : r;
}

long long inv_mod(long long a, long long p) {
  // extended Euclid on integers
  long long t = 0, newt = 1, r = p, newr = mod_ll(a, p);
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  internal_check(r == 1, "inv_mod of non-unit");
  return mod_ll(t, p);
}

// --- raw polynomial arithmetic over F_p, ascending coefficients ----------

using PV = std::vector<long long>;

void pv_trim(PV& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PV pv_mul(const PV& a, const PV& b, long long p) {
  if (a.empty() || b.empty()) return {};
  PV r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = mod_ll(r[i + j] + a[i] * b[j], p);
  pv_trim(r);
  return r;
}

PV pv_mod(PV a, const PV& m, long long p) {
  pv_trim(a);
  long long lcInv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    long long c = mod_ll(a.back() * lcInv, p);
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i)
      a[shift + i] = mod_ll(a[shift + i] - c * m[i], p);
    pv_trim(a);
  }
  return a;
}

PV pv_powmod(PV base, unsigned long long e, const PV& m, long long p) {
  PV r{1};
  base = pv_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = pv_mod(pv_mul(r, base, p), m, p);
    base = pv_mod(pv_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

PV pv_gcd(PV a, PV b, long long p) {
  pv_trim(a);
  pv_trim(b);
  while (!b.empty()) {
    PV r = pv_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

unsigned long long pow_ull(long long b, int e) {
  unsigned long long r = 1;
  for (int i = 0; i < e; ++i) r *= static_cast<unsigned long long>(b);
  return r;
}

// x^(p^k) - x has every element of F_{p^k} as a root; f of degree k is
// irreducible iff x^(p^k) = x (mod f) and gcd(x^(p^(k/l)) - x, f) = 1 for
// every prime l | k.
bool pv_irreducible(const PV& f, long long p) {
  int k = static_cast<int>(f.size()) - 1;
  if (k < 1) return false;
  if (k == 1) return true;
  PV x{0, 1};
  PV xqk = pv_powmod(x, pow_ull(p, k), f, p);
  if (xqk != pv_mod(x, f, p)) return false;
  for (int l = 2; l <= k; ++l) {
    if (k % l != 0) continue;
    bool lPrime = true;
    for (int d = 2; d * d <= l; ++d)
      if (l % d == 0) lPrime = false;
    if (!lPrime) continue;
    PV xq = pv_powmod(x, pow_ull(p, k / l), f, p);
    PV diff = xq;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = mod_ll(diff[1] - 1, p);
    pv_trim(diff);
    PV g = pv_gcd(f, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

PV lex_smallest_irreducible(long long p, int k) {
  if (k == 1) return PV{0, 1};  // x
  // enumerate (c_0,...,c_{k-1}) lexicographically
  PV c(k, 0);
  while (true) {
    PV f = c;
    f.push_back(1);
    if (pv_irreducible(f, p)) return f;
    // increment from the last coordinate (lex order: c_0 is most significant)
    int i = k - 1;
    while (i >= 0 && c[i] == p - 1) c[i--] = 0;
    internal_check(i >= 0, "no irreducible polynomial found");
    ++c[i];
  }
}

}  // namespace

bool is_prime_ll(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long long FqConfig::q() const {
  long long r = 1;
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

std::string FqConfig::str() const {
  std::ostringstream os;
  os << "F_" << p;
  if (k > 1) os << '^' << k;
  return os.str();
}

FqField fq_field(long long p, int k) {
  require(k >= 1, "extension degree must be positive");
  require(is_prime_ll(p), "characteristic must be prime");
  require(k <= 24, "extension degree beyond desk scale");
  static std::mutex mu;
  static std::map<std::pair<long long, int>, FqField> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto cfg = std::make_shared<FqConfig>();
  cfg->p = p;
  cfg->k = k;
  cfg->modulus = lex_smallest_irreducible(p, k);
  cache[key] = cfg;
  return cfg;
}

// --- FqElem ---------------------------------------------------------------

FqElem::FqElem(FqField cfg, std::vector<long long> coeffs)
    : cfg_(std::move(cfg)), c_(std::move(coeffs)) {
  require(cfg_ != nullptr, "null field config");
  require(static_cast<int>(c_.size()) <= cfg_->k, "coefficient vector too long");
  c_.resize(cfg_->k, 0);
  for (auto& x : c_) x = mod_ll(x, cfg_->p);
}

FqElem FqElem::zero(const FqField& cfg) { return FqElem(cfg, {}); }

FqElem FqElem::one(const FqField& cfg) { return FqElem(cfg, {1}); }

FqElem FqElem::gen(const FqField& cfg) {
  require(cfg->k >= 1, "bad config");
  if (cfg->k == 1) {
    // x reduces to a scalar mod the linear modulus x (+ c)
    return FqElem(cfg, {mod_ll(-cfg->modulus[0], cfg->p)});
  }
  std::vector<long long> c(cfg->k, 0);
  c[1] = 1;
  return FqElem(cfg, std::move(c));
}

FqElem FqElem::from_int(const FqField& cfg, long long v) {
  return FqElem(cfg, {mod_ll(v, cfg->p)});
}

FqElem FqElem::bind(const FqField& cfg) const {
  if (cfg_) {
    require(cfg_ == cfg, "mixing elements of different fields");
    return *this;
  }
  return from_int(cfg, lit_);
}

const std::vector<long long>& FqElem::coeffs() const {
  internal_check(bound(), "coeffs() on unbound literal");
  return c_;
}

bool FqElem::is_zero() const {
  if (!cfg_) return lit_ == 0;
  for (auto x : c_)
    if (x != 0) return false;
  return true;
}

bool FqElem::is_one() const {
  if (!cfg_) return lit_ == 1;
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

FqElem FqElem::operator-() const {
  if (!cfg_) return FqElem(-lit_);
  FqElem r = *this;
  for (auto& x : r.c_) x = mod_ll(-x, cfg_->p);
  return r;
}

FqElem& FqElem::operator+=(const FqElem& o) {
  if (!cfg_ && !o.cfg_) {
    lit_ += o.lit_;
    return *this;
  }
  if (!cfg_) *this = bind(o.cfg_);
  FqElem rhs = o.bind(cfg_);
  for (int i = 0; i < cfg_->k; ++i) c_[i] = mod_ll(c_[i] + rhs.c_[i], cfg_->p);
  return *this;
}

FqElem& FqElem::operator-=(const FqElem& o) { return *this += -o; }

FqElem& FqElem::operator*=(const FqElem& o) {
  if (!cfg_ && !o.cfg_) {
    lit_ *= o.lit_;
    return *this;
  }
  if (!cfg_) *this = bind(o.cfg_);
  FqElem rhs = o.bind(cfg_);
  PV prod = pv_mul(c_, rhs.c_, cfg_->p);
  prod = pv_mod(std::move(prod), cfg_->modulus, cfg_->p);
  prod.resize(cfg_->k, 0);
  c_ = std::move(prod);
  return *this;
}

FqElem& FqElem::operator/=(const FqElem& o) { return *this *= o.inverse(); }

bool operator==(const FqElem& a, const FqElem& b) {
  if (!a.cfg_ && !b.cfg_) return a.lit_ == b.lit_;
  if (!a.cfg_) return a.bind(b.cfg_) == b;
  if (!b.cfg_) return a == b.bind(a.cfg_);
  require(a.cfg_ == b.cfg_, "comparing elements of different fields");
  return a.c_ == b.c_;
}

FqElem FqElem::inverse() const {
  if (!cfg_) {
    if (lit_ == 1) return FqElem(1);
    if (lit_ == -1) return FqElem(-1);
    throw InternalError("inverse of unbound literal");
  }
  require(!is_zero(), "inverse of zero field element");
  // extended Euclid in F_p[x] against the modulus
  long long p = cfg_->p;
  PV r0 = cfg_->modulus, r1 = c_;
  pv_trim(r1);
  PV t0 = {}, t1 = {1};
  while (!r1.empty()) {
    // quotient of r0 by r1
    PV q;
    PV rem = r0;
    long long lcInv = inv_mod(r1.back(), p);
    pv_trim(rem);
    if (rem.size() >= r1.size()) q.resize(rem.size() - r1.size() + 1, 0);
    while (rem.size() >= r1.size() && !rem.empty()) {
      long long cq = mod_ll(rem.back() * lcInv, p);
      size_t shift = rem.size() - r1.size();
      q[shift] = cq;
      for (size_t i = 0; i < r1.size(); ++i)
        rem[shift + i] = mod_ll(rem[shift + i] - cq * r1[i], p);
      pv_trim(rem);
    }
    PV tNext = t0;
    PV qt = pv_mul(q, t1, p);
    tNext.resize(std::max(tNext.size(), qt.size()), 0);
    for (size_t i = 0; i < qt.size(); ++i) tNext[i] = mod_ll(tNext[i] - qt[i], p);
    pv_trim(tNext);
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(tNext);
  }
  internal_check(r0.size() == 1, "element not invertible");
  long long scale = inv_mod(r0[0], p);
  for (auto& x : t0) x = mod_ll(x * scale, p);
  t0 = pv_mod(std::move(t0), cfg_->modulus, p);
  return FqElem(cfg_, std::move(t0));
}

FqElem FqElem::pow(long long e) const {
  if (!bound()) {
    if (lit_ == 0) return e == 0 ? FqElem(1) : FqElem(0);
    if (lit_ == 1) return FqElem(1);
    if (lit_ == -1) return FqElem(e % 2 == 0 ? 1 : -1);
    throw InternalError("pow on unbound literal");
  }
  if (e < 0) return inverse().pow(-e);
  FqElem r = one(cfg_);
  FqElem b = *this;
  unsigned long long ue = static_cast<unsigned long long>(e);
  while (ue) {
    if (ue & 1) r *= b;
    b *= b;
    ue >>= 1;
  }
  return r;
}

FqElem FqElem::frobenius(int i) const {
  if (!cfg_) return *this;  // literals are prime-field values, fixed by Frobenius
  int steps = ((i % cfg_->k) + cfg_->k) % cfg_->k;
  FqElem r = *this;
  for (int s = 0; s < steps; ++s) r = r.pow(cfg_->p);
  return r;
}

std::string FqElem::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FqElem& e) {
  if (!e.bound()) return os << "lit(" << e.literal() << ")";
  os << '[';
  const auto& c = e.coeffs();
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  return os << ']';
}

FqElem fq_element_at(const FqField& cfg, long long index) {
  std::vector<long long> c(cfg->k, 0);
  for (int i = 0; i < cfg->k; ++i) {
    c[i] = index % cfg->p;
    index /= cfg->p;
  }
  return FqElem(cfg, std::move(c));
}

// --- embeddings -----------------------------------------------------------

FqElem FqEmbedding::operator()(const FqElem& x) const {
  if (!x.bound()) return x;
  require(x.field() == src_, "embedding applied to element of wrong field");
  // evaluate the coefficient polynomial of x at the generator image
  FqElem acc = FqElem::zero(dst_);
  const auto& c = x.coeffs();
  for (size_t i = c.size(); i-- > 0;) {
    acc *= genImage_;
    acc += FqElem::from_int(dst_, c[i]);
  }
  return acc;
}

FqElem FqEmbedding::section(const FqElem& x) const {
  if (!x.bound()) return x;
  require(x.field() == dst_, "section applied to element of wrong field");
  // desk-scale inverse lookup: scan the small field
  long long qs = src_->q();
  for (long long i = 0; i < qs; ++i) {
    FqElem cand = fq_element_at(src_, i);
    if ((*this)(cand) == x) return cand;
  }
  throw ValidationError("element does not lie in the embedded subfield");
}

const FqEmbedding& fq_embedding(const FqField& src, const FqField& dst) {
  require(src->p == dst->p, "embedding requires equal characteristic");
  require(dst->k % src->k == 0, "no embedding: source degree does not divide target degree");
  static std::mutex mu;
  static std::map<std::pair<const FqConfig*, const FqConfig*>, FqEmbedding> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(src.get(), dst.get());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  // image of the source generator = lexicographically smallest root of the
  // source modulus in the target field
  long long qd = dst->q();
  for (long long i = 0; i < qd; ++i) {
    FqElem cand = fq_element_at(dst, i);
    FqElem acc = FqElem::zero(dst);
    for (size_t j = src->modulus.size(); j-- > 0;) {
      acc *= cand;
      acc += FqElem::from_int(dst, src->modulus[j]);
    }
    if (acc.is_zero()) {
      auto [pos, inserted] =
          cache.emplace(key, FqEmbedding(src, dst, cand));
      (void)inserted;
      return pos->second;
    }
  }
  throw InternalError("no root of subfield modulus found in target field");
}

}  // namespace kt
