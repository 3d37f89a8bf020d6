#pragma once

#include <Eigen/Core>

#include "balfan/quadratic.hpp"

namespace Eigen {

template <>
struct NumTraits<balfan::QuadraticScalar> {
  using Real = balfan::QuadraticScalar;
  using NonInteger = balfan::QuadraticScalar;
  using Nested = balfan::QuadraticScalar;
  using Literal = balfan::QuadraticScalar;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 120,
  };

  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace balfan {

using Vec3q = Eigen::Matrix<QuadraticScalar, 3, 1>;
using VectorXq = Eigen::Matrix<QuadraticScalar, Eigen::Dynamic, 1>;
using MatrixXq = Eigen::Matrix<QuadraticScalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Exact cross product of two 3-vectors.
template <typename DerivedA, typename DerivedB>
Vec3q cross3(const Eigen::MatrixBase<DerivedA>& u,
             const Eigen::MatrixBase<DerivedB>& v) {
  Vec3q result;
  result[0] = u[1] * v[2] - u[2] * v[1];
  result[1] = u[2] * v[0] - u[0] * v[2];
  result[2] = u[0] * v[1] - u[1] * v[0];
  return result;
}

/// Exact determinant of the 3x3 matrix with rows u, v, w.
template <typename DerivedA, typename DerivedB, typename DerivedC>
QuadraticScalar det3(const Eigen::MatrixBase<DerivedA>& u,
                     const Eigen::MatrixBase<DerivedB>& v,
                     const Eigen::MatrixBase<DerivedC>& w) {
  return cross3(u, v).dot(w);
}

}  // namespace balfan
