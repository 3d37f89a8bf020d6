#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "balfan/linalg.hpp"

namespace balfan {

/// Unordered pair of vertex names with canonical (lexicographic) storage.
struct EdgeId {
  std::string first;
  std::string second;

  EdgeId(std::string a, std::string b);
  auto operator<=>(const EdgeId&) const = default;

  /// "name1:name2" in canonical order.
  std::string text() const { return first + ":" + second; }
};

struct Vertex {
  std::string name;
  Vec3q position;
};

using Face = std::vector<std::string>;  // vertex cycle

/// A polytope 1-skeleton with exact coordinates.  The rays of the fan are
/// the raw vertex position vectors; edges are the 2-cones.  Vertices are
/// stored sorted by name and edges in canonical order, so every derived
/// matrix and file is deterministic.
class PolytopeSkeleton {
 public:
  PolytopeSkeleton(std::vector<Vertex> vertices, std::vector<EdgeId> edges,
                   std::vector<Face> faces = {}, std::int64_t radicand = 5);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<EdgeId>& edges() const noexcept { return edges_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  std::int64_t radicand() const noexcept { return radicand_; }

  Eigen::Index vertexCount() const { return static_cast<Eigen::Index>(vertices_.size()); }
  Eigen::Index edgeCount() const { return static_cast<Eigen::Index>(edges_.size()); }

  bool hasVertex(const std::string& name) const;
  Eigen::Index vertexIndex(const std::string& name) const;  // throws ValidationError
  const Vec3q& position(const std::string& name) const;
  const Vec3q& position(Eigen::Index index) const { return vertices_[static_cast<std::size_t>(index)].position; }

  std::optional<Eigen::Index> edgeIndex(const EdgeId& edge) const;
  bool hasEdge(const EdgeId& edge) const { return edgeIndex(edge).has_value(); }

  /// Names adjacent to `name`, sorted.
  std::vector<std::string> neighbors(const std::string& name) const;
  Eigen::Index degree(const std::string& name) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<EdgeId> edges_;
  std::vector<Face> faces_;
  std::int64_t radicand_ = 5;
};

enum class BuiltinSolid { Tetrahedron, Cube, Octahedron, Dodecahedron, Icosahedron };

std::optional<BuiltinSolid> solidFromName(std::string_view name);
std::string solidName(BuiltinSolid solid);

/// Standard exact coordinates with edges detected by squared edge length.
PolytopeSkeleton builtinPolytope(BuiltinSolid solid);
PolytopeSkeleton builtinPolytope(std::string_view name);  // throws ValidationError

/// All unordered vertex pairs at exact squared distance d2 (requires d2 > 0).
std::vector<EdgeId> edgesFromSquaredDistance(const PolytopeSkeleton& skeleton,
                                             const QuadraticScalar& d2);

/// Neighbors of `name` in exact cyclic order around the ray, decided purely
/// by signs of 3x3 determinants.  Starts at the lexicographically smallest
/// neighbor; rotation/reversal of the result describe the same cycle.
std::vector<std::string> linkCycle(const PolytopeSkeleton& skeleton,
                                   const std::string& name);

/// The five edge classes of the icosahedron relative to an axis vertex.
struct EdgeClassification {
  std::vector<EdgeId> polarNorth;   // edges at the axis
  std::vector<EdgeId> ringNorth;    // edges between axis neighbors
  std::vector<EdgeId> equatorial;
  std::vector<EdgeId> ringSouth;
  std::vector<EdgeId> polarSouth;   // edges at the antipode
};

/// Name of the vertex at exactly -r(name), if present.
std::optional<std::string> antipodeOf(const PolytopeSkeleton& skeleton,
                                      const std::string& name);

EdgeClassification classifyEdgesByAxis(const PolytopeSkeleton& skeleton,
                                       const std::string& axis);

struct Diagnostic {
  std::string code;     // "zero-ray", "duplicate-ray", "duplicate-edge", "dangling-face-vertex"
  std::string message;
};

/// Structural diagnostics; empty iff all skeleton invariants hold.
std::vector<Diagnostic> validate(const PolytopeSkeleton& skeleton);

}  // namespace balfan
