#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "balfan/rref.hpp"
#include "balfan/skeleton.hpp"

namespace balfan {

/// Candidate Minkowski weight: one scalar per skeleton edge, aligned with
/// the skeleton's canonical edge order.
using WeightVector = VectorXq;

/// The exact balancing system: 3 rows per vertex (in name order), one
/// column per edge (in canonical order).  The block of vertex v at edge
/// e = {v, w} holds the components of cross(r_w, r_v); a weight c is
/// balanced iff this matrix times c vanishes.
MatrixXq assembleSystem(const PolytopeSkeleton& skeleton);

struct VertexResidual {
  std::string vertex;
  Vec3q residual;  // cross(sum of weighted neighbor rays, r_v)
};

struct BalanceVerdict {
  bool balanced = false;
  std::vector<VertexResidual> failures;  // empty iff balanced
};

/// Direct verification of the balancing condition at every vertex: the
/// incident weighted neighbor rays are summed first and crossed with the
/// vertex ray afterwards, independently of assembleSystem.
BalanceVerdict isBalanced(const PolytopeSkeleton& skeleton,
                          const WeightVector& weight);

/// Canonical echelon basis (rows) of the space of balanced weights.
MatrixXq weightSpace(const PolytopeSkeleton& skeleton);

struct AffineSolutionSet {
  WeightVector particular;
  MatrixXq homogeneous;  // canonical echelon basis rows

  Eigen::Index dimension() const { return homogeneous.rows(); }
};

/// Balancing plus pinned values plus forced zeros.  Returns the solution
/// set, or nullopt when the constraints are contradictory.
std::optional<AffineSolutionSet> constrainedSolve(
    const PolytopeSkeleton& skeleton,
    const std::vector<std::pair<EdgeId, QuadraticScalar>>& pins,
    const std::vector<EdgeId>& zeros);

/// Deterministic generic element of the family spanned/translated by the
/// given vectors: coefficients 1, t, t^2, ... for the smallest natural t
/// whose combination has no zero outside the family's common zero set.
WeightVector maxSupportWeight(const std::vector<WeightVector>& family);
WeightVector maxSupportWeight(const MatrixXq& basisRows);
WeightVector maxSupportWeight(const AffineSolutionSet& solutions);

/// For each edge e (canonical order): does some balanced weight vanish
/// exactly on {e}?  Decided by an exact solve with the zero constraint
/// followed by a maximal-support combination.
std::vector<bool> supportScan(const PolytopeSkeleton& skeleton);

/// Edge permutation induced by a vertex-name bijection; throws
/// ValidationError when the map is not a bijection or does not preserve
/// the edge set.
std::vector<Eigen::Index> edgePermutationFromVertexMap(
    const PolytopeSkeleton& skeleton,
    const std::map<std::string, std::string>& vertexMap);

/// Canonical echelon basis of the balanced weights fixed by every
/// generator: c is kept iff c(g(e)) = c(e) for all g.
MatrixXq symmetricSpace(const PolytopeSkeleton& skeleton,
                        const std::vector<std::vector<Eigen::Index>>& generators);

}  // namespace balfan
