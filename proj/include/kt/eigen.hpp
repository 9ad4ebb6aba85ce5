#pragma once

#include <Eigen/Dense>

#include "kt/fq.hpp"
#include "kt/laurent.hpp"
#include "kt/rat.hpp"
#include "kt/ratfunc.hpp"

// NumTraits so the exact scalars work inside Eigen dense expressions.
// Costs are placeholders; nothing here is performance-tuned.

namespace Eigen {

#define KT_EXACT_NUM_TRAITS(T)                                    \
  template <>                                                     \
  struct NumTraits<T> : GenericNumTraits<T> {                     \
    typedef T Real;                                               \
    typedef T NonInteger;                                         \
    typedef T Nested;                                             \
    typedef T Literal;                                            \
    enum {                                                        \
      IsComplex = 0,                                              \
      IsInteger = 0,                                              \
      IsSigned = 1,                                               \
      RequireInitialization = 1,                                  \
      ReadCost = 8,                                               \
      AddCost = 64,                                               \
      MulCost = 64                                                \
    };                                                            \
    static inline Real epsilon() { return T(0); }                 \
    static inline Real dummy_precision() { return T(0); }         \
    static inline int digits10() { return 0; }                    \
  }

KT_EXACT_NUM_TRAITS(kt::Rat);
KT_EXACT_NUM_TRAITS(kt::FqElem);
KT_EXACT_NUM_TRAITS(kt::RatFunc);
KT_EXACT_NUM_TRAITS(kt::LaurentPoly);

#undef KT_EXACT_NUM_TRAITS

}  // namespace Eigen

namespace kt {

template <class T>
using DenseMatrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using DenseVector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace kt
