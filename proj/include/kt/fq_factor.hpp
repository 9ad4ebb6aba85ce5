#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kt/fq.hpp"
#include "kt/poly.hpp"

namespace kt {

using FqPoly = Poly<FqElem>;

/// Seed used for equal-degree splitting unless the caller overrides it.
/// Recorded in every factorization result so runs are reproducible.
inline constexpr std::uint64_t kDefaultFactorSeed = 0x6b74636131u;

struct FqFactorResult {
  FqElem unit;  // leading coefficient of the input
  std::vector<std::pair<FqPoly, int>> factors;  // monic irreducible, multiplicity
  std::uint64_t seed = kDefaultFactorSeed;
};

/// Bind all literal coefficients of a polynomial to a field.
FqPoly bind_poly(const FqPoly& f, const FqField& cfg);

/// Complete factorization over F_q into monic irreducibles with
/// multiplicities. Deterministic for a fixed seed; factors are sorted by
/// (degree, coefficient tuple).
FqFactorResult poly_factor(const FqPoly& f, const FqField& cfg,
                           std::uint64_t seed = kDefaultFactorSeed);

bool is_irreducible(const FqPoly& f, const FqField& cfg);

/// Roots in F_q with multiplicities.
std::vector<std::pair<FqElem, int>> poly_roots(const FqPoly& f, const FqField& cfg);

/// Squarefree part (product of the distinct irreducible factors).
FqPoly squarefree_part(const FqPoly& f, const FqField& cfg);

}  // namespace kt
