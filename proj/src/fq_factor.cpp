#include "kt/fq_factor.hpp"

#include <algorithm>
#include <random>

namespace kt {

namespace {

FqPoly x_power_q(const FqPoly& base, const FqField& cfg, const FqPoly& mod) {
  // base^q (q = p^k) by k rounds of p-powering
  FqPoly r = base % mod;
  for (int i = 0; i < cfg->k; ++i) r = poly_powmod(r, static_cast<unsigned long long>(cfg->p), mod);
  return r;
}

FqPoly random_poly(std::mt19937_64& rng, const FqField& cfg, int maxDeg) {
  std::vector<FqElem> c;
  c.reserve(maxDeg + 1);
  for (int i = 0; i <= maxDeg; ++i)
    c.push_back(fq_element_at(cfg, static_cast<long long>(rng() % static_cast<std::uint64_t>(cfg->q()))));
  return FqPoly(std::move(c));
}

// equal-degree splitting: g is a monic squarefree product of irreducibles of
// degree d; appends them to out.
void edf(const FqPoly& g, int d, const FqField& cfg, std::mt19937_64& rng,
         std::vector<FqPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const unsigned long long q = static_cast<unsigned long long>(cfg->q());
  FqPoly splitter;
  while (true) {
    FqPoly h = random_poly(rng, cfg, g.degree() - 1);
    if (h.is_zero() || h.degree() < 1) continue;
    FqPoly candidate;
    if (cfg->p == 2) {
      // trace over F_2: sum of h^(2^i), i < k*d
      FqPoly tr = h % g;
      FqPoly pw = h % g;
      for (int i = 1; i < cfg->k * d; ++i) {
        pw = poly_powmod(pw, 2ull, g);
        tr = (tr + pw) % g;
      }
      candidate = poly_gcd(tr, g);
    } else {
      // norm down to F_q then power by (q-1)/2
      FqPoly u = h % g;
      FqPoly w = h % g;
      for (int i = 1; i < d; ++i) {
        w = x_power_q(w, cfg, g);
        u = (u * w) % g;
      }
      FqPoly r = poly_powmod(u, (q - 1) / 2, g);
      candidate = poly_gcd(r - FqPoly::one(), g);
    }
    if (candidate.degree() > 0 && candidate.degree() < g.degree()) {
      splitter = candidate;
      break;
    }
  }
  edf(splitter, d, cfg, rng, out);
  edf(g / splitter, d, cfg, rng, out);
}

// distinct-degree factorization of a monic squarefree polynomial
void ddf(FqPoly f, const FqField& cfg, std::mt19937_64& rng,
         std::vector<FqPoly>& out) {
  FqPoly x = bind_poly(FqPoly::x(), cfg);
  FqPoly xq = x % f;
  int d = 0;
  while (f.degree() > 0) {
    ++d;
    if (2 * d > f.degree()) {
      out.push_back(f.monic());
      break;
    }
    xq = x_power_q(xq, cfg, f);
    FqPoly g = poly_gcd(xq - x, f);
    if (g.degree() > 0) {
      edf(g, d, cfg, rng, out);
      f = f / g;
      xq = xq % f;
    }
  }
}

FqPoly pth_root(const FqPoly& f, const FqField& cfg) {
  // f = g(x^p); coefficients of g are the p-th roots of f's stride-p coeffs
  long long e = 1;
  for (int j = 0; j < cfg->k - 1; ++j) e *= cfg->p;
  std::vector<FqElem> c;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(cfg->p))
    c.push_back(f.coeff(i).bind(cfg).pow(e));
  return FqPoly(std::move(c));
}

void squarefree_decompose(const FqPoly& f, const FqField& cfg, int multScale,
                          std::vector<std::pair<FqPoly, int>>& out) {
  if (f.degree() <= 0) return;
  FqPoly fp = f.derivative();
  if (fp.is_zero()) {
    squarefree_decompose(pth_root(f, cfg), cfg, multScale * static_cast<int>(cfg->p), out);
    return;
  }
  FqPoly t = poly_gcd(f, fp);
  FqPoly w = f / t;
  int i = 1;
  while (w.degree() > 0) {
    FqPoly y = poly_gcd(w, t);
    FqPoly z = w / y;
    if (z.degree() > 0) out.emplace_back(z.monic(), i * multScale);
    w = y;
    t = t / y;
    ++i;
  }
  if (t.degree() > 0)
    squarefree_decompose(pth_root(t, cfg), cfg, multScale * static_cast<int>(cfg->p), out);
}

bool poly_less(const FqPoly& a, const FqPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i <= a.degree(); ++i) {
    std::vector<long long> ca = a.coeff(i).coeffs();
    std::vector<long long> cb = b.coeff(i).coeffs();
    if (ca != cb) return ca < cb;
  }
  return false;
}

}  // namespace

FqPoly bind_poly(const FqPoly& f, const FqField& cfg) {
  std::vector<FqElem> c;
  c.reserve(f.degree() + 1);
  for (int i = 0; i <= f.degree(); ++i) c.push_back(f.coeff(i).bind(cfg));
  return FqPoly(std::move(c));
}

FqFactorResult poly_factor(const FqPoly& fin, const FqField& cfg, std::uint64_t seed) {
  FqPoly f = bind_poly(fin, cfg);
  require(!f.is_zero(), "cannot factor the zero polynomial");
  FqFactorResult res;
  res.seed = seed;
  res.unit = f.is_zero() ? FqElem::one(cfg) : f.lead();
  if (f.degree() == 0) return res;
  f = f.monic();

  std::vector<std::pair<FqPoly, int>> sqf;
  squarefree_decompose(f, cfg, 1, sqf);

  std::mt19937_64 rng(seed);
  for (const auto& [part, mult] : sqf) {
    std::vector<FqPoly> irr;
    ddf(part, cfg, rng, irr);
    // quotients can carry unbound zero coefficients; bind before exposing
    for (auto& g : irr) res.factors.emplace_back(bind_poly(g, cfg), mult);
  }
  std::sort(res.factors.begin(), res.factors.end(),
            [](const auto& a, const auto& b) {
              if (a.first == b.first) return a.second < b.second;
              return poly_less(a.first, b.first);
            });
  return res;
}

bool is_irreducible(const FqPoly& fin, const FqField& cfg) {
  FqPoly f = bind_poly(fin, cfg);
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  f = f.monic();
  FqPoly x = bind_poly(FqPoly::x(), cfg);
  int n = f.degree();
  // x^(q^n) == x mod f, and x^(q^(n/l)) - x coprime to f for prime l | n
  FqPoly xq = x % f;
  std::vector<FqPoly> powers;  // x^(q^i) for i = 1..n
  for (int i = 1; i <= n; ++i) {
    xq = x_power_q(xq, cfg, f);
    powers.push_back(xq);
  }
  if (!(powers[n - 1] == x % f)) return false;
  for (int l = 2; l <= n; ++l) {
    if (n % l != 0) continue;
    bool prime = true;
    for (int d = 2; d * d <= l; ++d)
      if (l % d == 0) prime = false;
    if (!prime) continue;
    FqPoly g = poly_gcd(powers[n / l - 1] - x, f);
    if (g.degree() != 0) return false;
  }
  return true;
}

std::vector<std::pair<FqElem, int>> poly_roots(const FqPoly& f, const FqField& cfg) {
  auto res = poly_factor(f, cfg);
  std::vector<std::pair<FqElem, int>> roots;
  for (const auto& [g, mult] : res.factors)
    if (g.degree() == 1) roots.emplace_back(-g.coeff(0), mult);
  return roots;
}

FqPoly squarefree_part(const FqPoly& f, const FqField& cfg) {
  std::vector<std::pair<FqPoly, int>> sqf;
  squarefree_decompose(bind_poly(f, cfg).monic(), cfg, 1, sqf);
  FqPoly r = bind_poly(FqPoly::one(), cfg);
  for (const auto& [part, mult] : sqf) r = r * part;
  return bind_poly(r, cfg);
}

}  // namespace kt
