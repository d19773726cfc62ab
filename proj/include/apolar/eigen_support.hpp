#pragma once

// Lets the exact scalars live inside Eigen dense matrices.

#include <Eigen/Core>

#include "apolar/field.hpp"

namespace Eigen {

template <>
struct NumTraits<apolar::ModP> : GenericNumTraits<apolar::ModP> {
  using Real = apolar::ModP;
  using NonInteger = apolar::ModP;
  using Literal = apolar::ModP;
  using Nested = apolar::ModP;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
};

template <>
struct NumTraits<apolar::Rational> : GenericNumTraits<apolar::Rational> {
  using Real = apolar::Rational;
  using NonInteger = apolar::Rational;
  using Literal = apolar::Rational;
  using Nested = apolar::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 50
  };
};

}  // namespace Eigen

namespace apolar {

template <class S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace apolar
