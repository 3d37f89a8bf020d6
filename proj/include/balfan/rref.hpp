#pragma once

#include <vector>

#include "balfan/linalg.hpp"

namespace balfan {

/// Reduced row-echelon form together with its pivot columns.  The reduced
/// form of a matrix is unique for its row space, so any row permutation of
/// the input produces an identical result.
template <typename Scalar>
struct EchelonForm {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> reduced;
  std::vector<Eigen::Index> pivotColumns;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivotColumns.size()); }
};

/// Fraction-free (Bareiss) forward elimination followed by a reduced
/// normalization pass.  Pivots are chosen as the first nonzero entry in
/// canonical column order; every division in the forward pass is exact.
template <typename Derived>
EchelonForm<typename Derived::Scalar> reducedRowEchelon(
    const Eigen::MatrixBase<Derived>& matrix) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Matrix work = matrix;
  const Eigen::Index rows = work.rows();
  const Eigen::Index cols = work.cols();
  std::vector<Eigen::Index> pivots;

  Scalar previousPivot(1);
  Eigen::Index pivotRow = 0;
  for (Eigen::Index col = 0; col < cols && pivotRow < rows; ++col) {
    Eigen::Index candidate = pivotRow;
    while (candidate < rows && work(candidate, col) == Scalar(0)) ++candidate;
    if (candidate == rows) continue;
    if (candidate != pivotRow) work.row(candidate).swap(work.row(pivotRow));

    const Scalar pivot = work(pivotRow, col);
    for (Eigen::Index i = pivotRow + 1; i < rows; ++i) {
      for (Eigen::Index j = col + 1; j < cols; ++j) {
        work(i, j) = (pivot * work(i, j) - work(i, col) * work(pivotRow, j)) /
                     previousPivot;
      }
      work(i, col) = Scalar(0);
    }
    previousPivot = pivot;
    pivots.push_back(col);
    ++pivotRow;
  }

  // Normalize: unit pivots, zeros above each pivot.
  for (Eigen::Index k = static_cast<Eigen::Index>(pivots.size()) - 1; k >= 0; --k) {
    const Eigen::Index col = pivots[static_cast<std::size_t>(k)];
    work.row(k) /= work(k, col);
    for (Eigen::Index i = 0; i < k; ++i) {
      if (!(work(i, col) == Scalar(0))) {
        work.row(i) -= work(i, col) * work.row(k);
      }
    }
  }

  return {std::move(work), std::move(pivots)};
}

namespace detail {

/// Kernel vectors of a matrix given its reduced echelon form, one per free
/// column, assembled as rows.  `cols` bounds the columns considered (used
/// to ignore an augmented right-hand side).
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> kernelFromEchelon(
    const EchelonForm<Scalar>& echelon, Eigen::Index cols) {
  std::vector<bool> isPivot(static_cast<std::size_t>(cols), false);
  for (Eigen::Index p : echelon.pivotColumns) {
    if (p < cols) isPivot[static_cast<std::size_t>(p)] = true;
  }
  std::vector<Eigen::Index> freeColumns;
  for (Eigen::Index j = 0; j < cols; ++j) {
    if (!isPivot[static_cast<std::size_t>(j)]) freeColumns.push_back(j);
  }

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> kernel(
      static_cast<Eigen::Index>(freeColumns.size()), cols);
  kernel.setZero();
  for (std::size_t i = 0; i < freeColumns.size(); ++i) {
    const Eigen::Index f = freeColumns[i];
    kernel(static_cast<Eigen::Index>(i), f) = Scalar(1);
    for (std::size_t k = 0; k < echelon.pivotColumns.size(); ++k) {
      const Eigen::Index p = echelon.pivotColumns[k];
      if (p < cols) {
        kernel(static_cast<Eigen::Index>(i), p) =
            -echelon.reduced(static_cast<Eigen::Index>(k), f);
      }
    }
  }
  return kernel;
}

}  // namespace detail

/// Canonical nullspace basis: kernel vectors re-echelonized so the result
/// is the unique reduced basis of the kernel subspace (rows are the basis).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
nullspaceBasis(const Eigen::MatrixBase<Derived>& matrix) {
  const auto echelon = reducedRowEchelon(matrix);
  const auto kernel = detail::kernelFromEchelon(echelon, matrix.cols());
  return reducedRowEchelon(kernel).reduced;
}

/// Solution of A x = b as a particular vector plus a canonical basis of the
/// homogeneous kernel; `feasible` is false when the system is inconsistent.
template <typename Scalar>
struct AffineSolution {
  bool feasible = false;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> particular;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> homogeneous;
};

template <typename DerivedA, typename DerivedB>
AffineSolution<typename DerivedA::Scalar> solveExact(
    const Eigen::MatrixBase<DerivedA>& matrix,
    const Eigen::MatrixBase<DerivedB>& rhs) {
  using Scalar = typename DerivedA::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  const Eigen::Index cols = matrix.cols();
  Matrix augmented(matrix.rows(), cols + 1);
  augmented.leftCols(cols) = matrix;
  augmented.col(cols) = rhs;

  const auto echelon = reducedRowEchelon(augmented);
  AffineSolution<Scalar> solution;
  for (Eigen::Index p : echelon.pivotColumns) {
    if (p == cols) return solution;  // pivot in the rhs column: inconsistent
  }

  solution.feasible = true;
  solution.particular = Vector::Zero(cols);
  for (std::size_t k = 0; k < echelon.pivotColumns.size(); ++k) {
    solution.particular[echelon.pivotColumns[k]] =
        echelon.reduced(static_cast<Eigen::Index>(k), cols);
  }
  const auto kernel = detail::kernelFromEchelon(echelon, cols);
  solution.homogeneous = reducedRowEchelon(kernel).reduced;
  return solution;
}

}  // namespace balfan
