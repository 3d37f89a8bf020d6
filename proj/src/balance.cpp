#include "balfan/balance.hpp"

#include <algorithm>
#include <set>

namespace balfan {

namespace {

void requireValid(const PolytopeSkeleton& skeleton) {
  const auto diagnostics = validate(skeleton);
  if (!diagnostics.empty()) {
    std::string message = "invalid skeleton:";
    for (const Diagnostic& d : diagnostics) message += " [" + d.code + "] " + d.message + ";";
    throw ValidationError(message);
  }
}

void requireAligned(const PolytopeSkeleton& skeleton, const WeightVector& weight) {
  if (weight.size() != skeleton.edgeCount()) {
    throw ValidationError("weight vector has " + std::to_string(weight.size()) +
                          " entries for " + std::to_string(skeleton.edgeCount()) +
                          " edges");
  }
}

}  // namespace

MatrixXq assembleSystem(const PolytopeSkeleton& skeleton) {
  requireValid(skeleton);
  MatrixXq system(3 * skeleton.vertexCount(), skeleton.edgeCount());
  system.setZero();
  for (Eigen::Index e = 0; e < skeleton.edgeCount(); ++e) {
    const EdgeId& edge = skeleton.edges()[static_cast<std::size_t>(e)];
    const Eigen::Index u = skeleton.vertexIndex(edge.first);
    const Eigen::Index w = skeleton.vertexIndex(edge.second);
    system.block<3, 1>(3 * u, e) = cross3(skeleton.position(w), skeleton.position(u));
    system.block<3, 1>(3 * w, e) = cross3(skeleton.position(u), skeleton.position(w));
  }
  return system;
}

BalanceVerdict isBalanced(const PolytopeSkeleton& skeleton,
                          const WeightVector& weight) {
  requireAligned(skeleton, weight);
  BalanceVerdict verdict;
  std::vector<Vec3q> sums(static_cast<std::size_t>(skeleton.vertexCount()),
                          Vec3q::Zero());
  for (Eigen::Index e = 0; e < skeleton.edgeCount(); ++e) {
    const EdgeId& edge = skeleton.edges()[static_cast<std::size_t>(e)];
    const Eigen::Index u = skeleton.vertexIndex(edge.first);
    const Eigen::Index w = skeleton.vertexIndex(edge.second);
    sums[static_cast<std::size_t>(u)] += weight[e] * skeleton.position(w);
    sums[static_cast<std::size_t>(w)] += weight[e] * skeleton.position(u);
  }
  for (Eigen::Index v = 0; v < skeleton.vertexCount(); ++v) {
    const Vec3q residual =
        cross3(sums[static_cast<std::size_t>(v)], skeleton.position(v));
    if (!(residual[0].isZero() && residual[1].isZero() && residual[2].isZero())) {
      verdict.failures.push_back(
          {skeleton.vertices()[static_cast<std::size_t>(v)].name, residual});
    }
  }
  verdict.balanced = verdict.failures.empty();
  return verdict;
}

MatrixXq weightSpace(const PolytopeSkeleton& skeleton) {
  return nullspaceBasis(assembleSystem(skeleton));
}

std::optional<AffineSolutionSet> constrainedSolve(
    const PolytopeSkeleton& skeleton,
    const std::vector<std::pair<EdgeId, QuadraticScalar>>& pins,
    const std::vector<EdgeId>& zeros) {
  const MatrixXq system = assembleSystem(skeleton);
  const Eigen::Index edgeCount = skeleton.edgeCount();
  const Eigen::Index extraRows =
      static_cast<Eigen::Index>(pins.size() + zeros.size());

  MatrixXq stacked(system.rows() + extraRows, edgeCount);
  VectorXq rhs = VectorXq::Zero(system.rows() + extraRows);
  stacked.topRows(system.rows()) = system;
  stacked.bottomRows(extraRows).setZero();

  Eigen::Index row = system.rows();
  const auto addConstraint = [&](const EdgeId& edge, const QuadraticScalar& value) {
    const auto index = skeleton.edgeIndex(edge);
    if (!index) {
      throw ValidationError("constraint references unknown edge " + edge.text());
    }
    stacked(row, *index) = QuadraticScalar(1);
    rhs[row] = value;
    ++row;
  };
  for (const auto& [edge, value] : pins) addConstraint(edge, value);
  for (const EdgeId& edge : zeros) addConstraint(edge, QuadraticScalar(0));

  auto solution = solveExact(stacked, rhs);
  if (!solution.feasible) return std::nullopt;
  return AffineSolutionSet{std::move(solution.particular),
                           std::move(solution.homogeneous)};
}

WeightVector maxSupportWeight(const std::vector<WeightVector>& family) {
  if (family.empty()) {
    throw ValidationError("max-support combination of an empty family");
  }
  const Eigen::Index size = family.front().size();
  for (const WeightVector& vector : family) {
    if (vector.size() != size) {
      throw ValidationError("family vectors have mismatched sizes");
    }
  }

  std::vector<bool> commonZero(static_cast<std::size_t>(size), true);
  for (const WeightVector& vector : family) {
    for (Eigen::Index j = 0; j < size; ++j) {
      if (!vector[j].isZero()) commonZero[static_cast<std::size_t>(j)] = false;
    }
  }

  // Coefficients 1, t, t^2, ...: each candidate coordinate is a nonzero
  // polynomial in t, so only finitely many t fail.
  constexpr long kLimit = 100000;
  for (long t = 1; t <= kLimit; ++t) {
    WeightVector combined = WeightVector::Zero(size);
    QuadraticScalar power(1);
    const QuadraticScalar step(t);
    for (const WeightVector& vector : family) {
      combined += power * vector;
      power *= step;
    }
    bool generic = true;
    for (Eigen::Index j = 0; j < size && generic; ++j) {
      if (!commonZero[static_cast<std::size_t>(j)] && combined[j].isZero()) {
        generic = false;
      }
    }
    if (generic) return combined;
  }
  throw ValidationError("no generic combination found");  // unreachable
}

WeightVector maxSupportWeight(const MatrixXq& basisRows) {
  if (basisRows.rows() == 0) return WeightVector::Zero(basisRows.cols());
  std::vector<WeightVector> family;
  family.reserve(static_cast<std::size_t>(basisRows.rows()));
  for (Eigen::Index i = 0; i < basisRows.rows(); ++i) {
    family.push_back(basisRows.row(i).transpose());
  }
  return maxSupportWeight(family);
}

WeightVector maxSupportWeight(const AffineSolutionSet& solutions) {
  std::vector<WeightVector> family;
  family.reserve(static_cast<std::size_t>(solutions.homogeneous.rows()) + 1);
  family.push_back(solutions.particular);
  for (Eigen::Index i = 0; i < solutions.homogeneous.rows(); ++i) {
    family.push_back(solutions.homogeneous.row(i).transpose());
  }
  return maxSupportWeight(family);
}

std::vector<bool> supportScan(const PolytopeSkeleton& skeleton) {
  std::vector<bool> feasible;
  feasible.reserve(skeleton.edges().size());
  for (const EdgeId& edge : skeleton.edges()) {
    const auto solution = constrainedSolve(skeleton, {}, {edge});
    bool ok = false;
    if (solution) {
      const WeightVector witness = maxSupportWeight(*solution);
      ok = true;
      const auto zeroed = skeleton.edgeIndex(edge);
      for (Eigen::Index j = 0; j < witness.size(); ++j) {
        const bool shouldVanish = (j == *zeroed);
        if (witness[j].isZero() != shouldVanish) {
          ok = false;
          break;
        }
      }
    }
    feasible.push_back(ok);
  }
  return feasible;
}

std::vector<Eigen::Index> edgePermutationFromVertexMap(
    const PolytopeSkeleton& skeleton,
    const std::map<std::string, std::string>& vertexMap) {
  if (vertexMap.size() != skeleton.vertices().size()) {
    throw ValidationError("vertex map must be total on the vertex set");
  }
  std::set<std::string> images;
  for (const auto& [from, to] : vertexMap) {
    if (!skeleton.hasVertex(from) || !skeleton.hasVertex(to)) {
      throw ValidationError("vertex map references unknown vertex '" + from +
                            "' or '" + to + "'");
    }
    images.insert(to);
  }
  if (images.size() != vertexMap.size()) {
    throw ValidationError("vertex map is not a bijection");
  }

  std::vector<Eigen::Index> permutation;
  permutation.reserve(skeleton.edges().size());
  for (const EdgeId& edge : skeleton.edges()) {
    const EdgeId image(vertexMap.at(edge.first), vertexMap.at(edge.second));
    const auto index = skeleton.edgeIndex(image);
    if (!index) {
      throw ValidationError("vertex map does not preserve edges: " + edge.text() +
                            " maps to missing " + image.text());
    }
    permutation.push_back(*index);
  }
  return permutation;
}

MatrixXq symmetricSpace(const PolytopeSkeleton& skeleton,
                        const std::vector<std::vector<Eigen::Index>>& generators) {
  const Eigen::Index edgeCount = skeleton.edgeCount();
  for (const auto& generator : generators) {
    if (static_cast<Eigen::Index>(generator.size()) != edgeCount) {
      throw ValidationError("edge permutation has wrong length");
    }
    std::vector<bool> seen(static_cast<std::size_t>(edgeCount), false);
    for (Eigen::Index image : generator) {
      if (image < 0 || image >= edgeCount || seen[static_cast<std::size_t>(image)]) {
        throw ValidationError("edge permutation is not a bijection");
      }
      seen[static_cast<std::size_t>(image)] = true;
    }
  }

  const MatrixXq system = assembleSystem(skeleton);
  Eigen::Index invarianceRows = 0;
  for (const auto& generator : generators) {
    for (Eigen::Index e = 0; e < edgeCount; ++e) {
      if (generator[static_cast<std::size_t>(e)] != e) ++invarianceRows;
    }
  }

  MatrixXq stacked(system.rows() + invarianceRows, edgeCount);
  stacked.topRows(system.rows()) = system;
  stacked.bottomRows(invarianceRows).setZero();
  Eigen::Index row = system.rows();
  for (const auto& generator : generators) {
    for (Eigen::Index e = 0; e < edgeCount; ++e) {
      const Eigen::Index image = generator[static_cast<std::size_t>(e)];
      if (image == e) continue;
      stacked(row, e) = QuadraticScalar(1);
      stacked(row, image) = stacked(row, image) - QuadraticScalar(1);
      ++row;
    }
  }
  return nullspaceBasis(stacked);
}

}  // namespace balfan
