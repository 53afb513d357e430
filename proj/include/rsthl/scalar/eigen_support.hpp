#ifndef RSTHL_SCALAR_EIGEN_SUPPORT_HPP
#define RSTHL_SCALAR_EIGEN_SUPPORT_HPP

#include <Eigen/Core>

#include "rsthl/scalar/rational_function.hpp"

namespace Eigen {

// Exact field: no rounding, so the precision hooks report zero and all
// comparisons in this codebase go through operator== / is_zero.
template <>
struct NumTraits<rsthl::RationalFunction> : GenericNumTraits<rsthl::RationalFunction> {
  using Real = rsthl::RationalFunction;
  using NonInteger = rsthl::RationalFunction;
  using Nested = rsthl::RationalFunction;
  using Literal = rsthl::RationalFunction;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 100,
    MulCost = 100
  };

  static inline Real epsilon() { return Real(); }
  static inline Real dummy_precision() { return Real(); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // RSTHL_SCALAR_EIGEN_SUPPORT_HPP
