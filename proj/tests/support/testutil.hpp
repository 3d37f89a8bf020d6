#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "balfan/balance.hpp"
#include "balfan/linalg.hpp"
#include "balfan/quadratic.hpp"

namespace balfan::testsupport {

using Float50 = boost::multiprecision::cpp_dec_float_50;

inline Float50 toFloat50(const Rational& value) {
  return Float50(boost::multiprecision::numerator(value).str()) /
         Float50(boost::multiprecision::denominator(value).str());
}

inline Float50 toFloat50(const QuadraticScalar& value) {
  return toFloat50(value.rationalPart()) +
         toFloat50(value.radicalPart()) *
             sqrt(Float50(static_cast<long long>(value.radicand())));
}

using FloatMatrix = std::vector<std::vector<Float50>>;

inline FloatMatrix toFloatMatrix(const MatrixXq& matrix) {
  FloatMatrix rows(static_cast<std::size_t>(matrix.rows()),
                   std::vector<Float50>(static_cast<std::size_t>(matrix.cols())));
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          toFloat50(matrix(i, j));
    }
  }
  return rows;
}

/// Floating-point rank at 50 decimal digits with partial pivoting by
/// magnitude — deliberately a different algorithm (and arithmetic) from the
/// library's fraction-free exact elimination.
inline int floatRank(FloatMatrix rows, const Float50& tolerance = Float50("1e-9")) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
    std::size_t best = row;
    for (std::size_t k = row + 1; k < rows.size(); ++k) {
      if (abs(rows[k][col]) > abs(rows[best][col])) best = k;
    }
    if (abs(rows[best][col]) <= tolerance) continue;
    std::swap(rows[row], rows[best]);
    for (std::size_t k = row + 1; k < rows.size(); ++k) {
      const Float50 factor = rows[k][col] / rows[row][col];
      for (std::size_t j = col; j < cols; ++j) {
        rows[k][j] -= factor * rows[row][j];
      }
    }
    ++rank;
    ++row;
  }
  return rank;
}

inline QuadraticScalar randomScalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> numerator(-20, 20);
  std::uniform_int_distribution<int> denominator(1, 12);
  return QuadraticScalar(Rational(numerator(rng), denominator(rng)),
                         Rational(numerator(rng), denominator(rng)), 5);
}

inline QuadraticScalar randomNonzeroScalar(std::mt19937& rng) {
  for (;;) {
    QuadraticScalar value = randomScalar(rng);
    if (!value.isZero()) return value;
  }
}

inline WeightVector randomWeight(std::mt19937& rng, Eigen::Index size) {
  WeightVector weight(size);
  for (Eigen::Index e = 0; e < size; ++e) weight[e] = randomScalar(rng);
  return weight;
}

/// Order-5 rotation of the builtin icosahedron about the vertex `a`.
inline std::map<std::string, std::string> icosaRotationAboutA() {
  return {{"a", "a"}, {"b", "l"}, {"c", "i"}, {"d", "d"}, {"e", "g"},
          {"f", "j"}, {"g", "k"}, {"h", "f"}, {"i", "e"}, {"j", "b"},
          {"k", "c"}, {"l", "h"}};
}

/// Reflection of the builtin icosahedron fixing the plane through a and c.
inline std::map<std::string, std::string> icosaReflectionFixingAC() {
  return {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"d", "d"}, {"e", "g"},
          {"f", "h"}, {"g", "e"}, {"h", "f"}, {"i", "k"}, {"j", "l"},
          {"k", "i"}, {"l", "j"}};
}

/// Order-5 rotation of the builtin icosahedron about the vertex `c`.
inline std::map<std::string, std::string> icosaRotationAboutC() {
  return {{"a", "k"}, {"b", "b"}, {"c", "c"}, {"d", "j"}, {"e", "g"},
          {"f", "i"}, {"g", "l"}, {"h", "f"}, {"i", "a"}, {"j", "e"},
          {"k", "h"}, {"l", "d"}};
}

}  // namespace balfan::testsupport
