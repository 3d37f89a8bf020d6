#include "balfan/skeleton.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace balfan {

EdgeId::EdgeId(std::string a, std::string b) {
  if (a == b) {
    throw ValidationError("edge endpoints must be distinct, got '" + a + "'");
  }
  if (b < a) std::swap(a, b);
  first = std::move(a);
  second = std::move(b);
}

PolytopeSkeleton::PolytopeSkeleton(std::vector<Vertex> vertices,
                                   std::vector<EdgeId> edges,
                                   std::vector<Face> faces,
                                   std::int64_t radicand)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      faces_(std::move(faces)),
      radicand_(radicand) {
  std::sort(vertices_.begin(), vertices_.end(),
            [](const Vertex& a, const Vertex& b) { return a.name < b.name; });
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (vertices_[i - 1].name == vertices_[i].name) {
      throw ValidationError("duplicate vertex name '" + vertices_[i].name + "'");
    }
  }
  for (const EdgeId& edge : edges_) {
    if (!hasVertex(edge.first) || !hasVertex(edge.second)) {
      throw ValidationError("edge " + edge.text() + " references unknown vertex");
    }
  }
  std::sort(edges_.begin(), edges_.end());
}

bool PolytopeSkeleton::hasVertex(const std::string& name) const {
  const auto it = std::lower_bound(
      vertices_.begin(), vertices_.end(), name,
      [](const Vertex& v, const std::string& n) { return v.name < n; });
  return it != vertices_.end() && it->name == name;
}

Eigen::Index PolytopeSkeleton::vertexIndex(const std::string& name) const {
  const auto it = std::lower_bound(
      vertices_.begin(), vertices_.end(), name,
      [](const Vertex& v, const std::string& n) { return v.name < n; });
  if (it == vertices_.end() || it->name != name) {
    throw ValidationError("unknown vertex '" + name + "'");
  }
  return static_cast<Eigen::Index>(it - vertices_.begin());
}

const Vec3q& PolytopeSkeleton::position(const std::string& name) const {
  return vertices_[static_cast<std::size_t>(vertexIndex(name))].position;
}

std::optional<Eigen::Index> PolytopeSkeleton::edgeIndex(const EdgeId& edge) const {
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), edge);
  if (it == edges_.end() || *it != edge) return std::nullopt;
  return static_cast<Eigen::Index>(it - edges_.begin());
}

std::vector<std::string> PolytopeSkeleton::neighbors(const std::string& name) const {
  std::set<std::string> found;
  for (const EdgeId& edge : edges_) {
    if (edge.first == name) found.insert(edge.second);
    if (edge.second == name) found.insert(edge.first);
  }
  return {found.begin(), found.end()};
}

Eigen::Index PolytopeSkeleton::degree(const std::string& name) const {
  return static_cast<Eigen::Index>(neighbors(name).size());
}

namespace {

Vec3q makeVec(QuadraticScalar x, QuadraticScalar y, QuadraticScalar z) {
  Vec3q v;
  v << std::move(x), std::move(y), std::move(z);
  return v;
}

}  // namespace

std::optional<BuiltinSolid> solidFromName(std::string_view name) {
  if (name == "tetrahedron") return BuiltinSolid::Tetrahedron;
  if (name == "cube") return BuiltinSolid::Cube;
  if (name == "octahedron") return BuiltinSolid::Octahedron;
  if (name == "dodecahedron") return BuiltinSolid::Dodecahedron;
  if (name == "icosahedron") return BuiltinSolid::Icosahedron;
  return std::nullopt;
}

std::string solidName(BuiltinSolid solid) {
  switch (solid) {
    case BuiltinSolid::Tetrahedron: return "tetrahedron";
    case BuiltinSolid::Cube: return "cube";
    case BuiltinSolid::Octahedron: return "octahedron";
    case BuiltinSolid::Dodecahedron: return "dodecahedron";
    case BuiltinSolid::Icosahedron: return "icosahedron";
  }
  throw ValidationError("unknown builtin solid");
}

PolytopeSkeleton builtinPolytope(BuiltinSolid solid) {
  const QuadraticScalar one(1);
  const QuadraticScalar zero(0);
  const QuadraticScalar phi(Rational(1, 2), Rational(1, 2), 5);     // (1+r5)/2
  const QuadraticScalar phiInv(Rational(-1, 2), Rational(1, 2), 5); // (r5-1)/2

  std::vector<Vertex> vertices;
  QuadraticScalar d2(0);
  const auto add = [&vertices](char name, Vec3q position) {
    vertices.push_back({std::string(1, name), std::move(position)});
  };

  switch (solid) {
    case BuiltinSolid::Tetrahedron: {
      add('a', makeVec(1, 1, 1));
      add('b', makeVec(1, -1, -1));
      add('c', makeVec(-1, 1, -1));
      add('d', makeVec(-1, -1, 1));
      d2 = QuadraticScalar(8);
      break;
    }
    case BuiltinSolid::Cube: {
      const int signs[8][3] = {{1, 1, 1},   {1, 1, -1},  {1, -1, 1},
                               {1, -1, -1}, {-1, 1, 1},  {-1, 1, -1},
                               {-1, -1, 1}, {-1, -1, -1}};
      for (int i = 0; i < 8; ++i) {
        add(static_cast<char>('a' + i),
            makeVec(signs[i][0], signs[i][1], signs[i][2]));
      }
      d2 = QuadraticScalar(4);
      break;
    }
    case BuiltinSolid::Octahedron: {
      add('a', makeVec(1, 0, 0));
      add('b', makeVec(-1, 0, 0));
      add('c', makeVec(0, 1, 0));
      add('d', makeVec(0, -1, 0));
      add('e', makeVec(0, 0, 1));
      add('f', makeVec(0, 0, -1));
      d2 = QuadraticScalar(2);
      break;
    }
    case BuiltinSolid::Icosahedron: {
      // cyclic permutations of (0, +-1, +-phi)
      add('a', makeVec(zero, one, phi));
      add('b', makeVec(zero, one, -phi));
      add('c', makeVec(zero, -one, phi));
      add('d', makeVec(zero, -one, -phi));
      add('e', makeVec(one, phi, zero));
      add('f', makeVec(one, -phi, zero));
      add('g', makeVec(-one, phi, zero));
      add('h', makeVec(-one, -phi, zero));
      add('i', makeVec(phi, zero, one));
      add('j', makeVec(phi, zero, -one));
      add('k', makeVec(-phi, zero, one));
      add('l', makeVec(-phi, zero, -one));
      d2 = QuadraticScalar(4);
      break;
    }
    case BuiltinSolid::Dodecahedron: {
      const int signs[8][3] = {{1, 1, 1},   {1, 1, -1},  {1, -1, 1},
                               {1, -1, -1}, {-1, 1, 1},  {-1, 1, -1},
                               {-1, -1, 1}, {-1, -1, -1}};
      for (int i = 0; i < 8; ++i) {
        add(static_cast<char>('a' + i),
            makeVec(signs[i][0], signs[i][1], signs[i][2]));
      }
      // cyclic permutations of (0, +-1/phi, +-phi)
      add('i', makeVec(zero, phiInv, phi));
      add('j', makeVec(zero, phiInv, -phi));
      add('k', makeVec(zero, -phiInv, phi));
      add('l', makeVec(zero, -phiInv, -phi));
      add('m', makeVec(phiInv, phi, zero));
      add('n', makeVec(phiInv, -phi, zero));
      add('o', makeVec(-phiInv, phi, zero));
      add('p', makeVec(-phiInv, -phi, zero));
      add('q', makeVec(phi, zero, phiInv));
      add('r', makeVec(phi, zero, -phiInv));
      add('s', makeVec(-phi, zero, phiInv));
      add('t', makeVec(-phi, zero, -phiInv));
      d2 = QuadraticScalar(Rational(6), Rational(-2), 5);  // 6 - 2*sqrt(5)
      break;
    }
  }

  PolytopeSkeleton withoutEdges(vertices, {}, {}, 5);
  return PolytopeSkeleton(std::move(vertices),
                          edgesFromSquaredDistance(withoutEdges, d2), {}, 5);
}

PolytopeSkeleton builtinPolytope(std::string_view name) {
  const auto solid = solidFromName(name);
  if (!solid) {
    throw ValidationError("unknown builtin polytope '" + std::string(name) + "'");
  }
  return builtinPolytope(*solid);
}

std::vector<EdgeId> edgesFromSquaredDistance(const PolytopeSkeleton& skeleton,
                                             const QuadraticScalar& d2) {
  if (d2.sign() <= 0) {
    throw ValidationError("squared distance must be positive, got " +
                          formatScalar(d2));
  }
  const auto& vertices = skeleton.vertices();
  std::vector<EdgeId> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const Vec3q difference = vertices[i].position - vertices[j].position;
      if (difference.dot(difference) == d2) {
        edges.emplace_back(vertices[i].name, vertices[j].name);
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<std::string> linkCycle(const PolytopeSkeleton& skeleton,
                                   const std::string& name) {
  const Vec3q& axis = skeleton.position(name);
  const std::vector<std::string> nbrs = skeleton.neighbors(name);
  if (nbrs.size() < 3) {
    throw ValidationError("link cycle requires degree >= 3 at vertex '" + name + "'");
  }

  const auto degenerate = [&name]() {
    return ValidationError("degenerate link geometry at vertex '" + name + "'");
  };

  const std::string& anchor = nbrs.front();
  const Vec3q& anchorRay = skeleton.position(anchor);
  std::vector<std::string> positiveSide;
  std::vector<std::string> opposite;
  std::vector<std::string> negativeSide;
  for (std::size_t i = 1; i < nbrs.size(); ++i) {
    const Vec3q& ray = skeleton.position(nbrs[i]);
    const int orientation = det3(axis, anchorRay, ray).sign();
    if (orientation > 0) {
      positiveSide.push_back(nbrs[i]);
    } else if (orientation < 0) {
      negativeSide.push_back(nbrs[i]);
    } else {
      // Projection parallel to the anchor's: compare directions via the
      // projected dot product scaled by |axis|^2.
      const QuadraticScalar projected =
          ray.dot(anchorRay) * axis.dot(axis) - ray.dot(axis) * anchorRay.dot(axis);
      if (projected.sign() < 0) {
        opposite.push_back(nbrs[i]);
      } else {
        throw degenerate();  // coincident or collinear directions
      }
    }
  }
  if (opposite.size() > 1) throw degenerate();

  const auto angularLess = [&](const std::string& x, const std::string& y) {
    const int d = det3(axis, skeleton.position(x), skeleton.position(y)).sign();
    if (d == 0) throw degenerate();
    return d > 0;
  };
  std::sort(positiveSide.begin(), positiveSide.end(), angularLess);
  std::sort(negativeSide.begin(), negativeSide.end(), angularLess);

  std::vector<std::string> cycle;
  cycle.reserve(nbrs.size());
  cycle.push_back(anchor);
  cycle.insert(cycle.end(), positiveSide.begin(), positiveSide.end());
  cycle.insert(cycle.end(), opposite.begin(), opposite.end());
  cycle.insert(cycle.end(), negativeSide.begin(), negativeSide.end());
  return cycle;
}

std::optional<std::string> antipodeOf(const PolytopeSkeleton& skeleton,
                                      const std::string& name) {
  const Vec3q negated = -skeleton.position(name);
  for (const Vertex& vertex : skeleton.vertices()) {
    if (vertex.position == negated) return vertex.name;
  }
  return std::nullopt;
}

EdgeClassification classifyEdgesByAxis(const PolytopeSkeleton& skeleton,
                                       const std::string& axis) {
  const auto antipode = antipodeOf(skeleton, axis);
  if (!antipode) {
    throw ValidationError("no antipode vertex for axis '" + axis + "'");
  }

  const std::vector<std::string> northList = skeleton.neighbors(axis);
  const std::vector<std::string> southList = skeleton.neighbors(*antipode);
  const std::set<std::string> north(northList.begin(), northList.end());
  const std::set<std::string> south(southList.begin(), southList.end());

  EdgeClassification classes;
  for (const EdgeId& edge : skeleton.edges()) {
    const bool hasAxis = edge.first == axis || edge.second == axis;
    const bool hasAntipode = edge.first == *antipode || edge.second == *antipode;
    if (hasAxis) {
      classes.polarNorth.push_back(edge);
    } else if (hasAntipode) {
      classes.polarSouth.push_back(edge);
    } else if (north.count(edge.first) && north.count(edge.second)) {
      classes.ringNorth.push_back(edge);
    } else if (south.count(edge.first) && south.count(edge.second)) {
      classes.ringSouth.push_back(edge);
    } else {
      classes.equatorial.push_back(edge);
    }
  }
  if (classes.polarNorth.size() != 5 || classes.ringNorth.size() != 5 ||
      classes.equatorial.size() != 10 || classes.ringSouth.size() != 5 ||
      classes.polarSouth.size() != 5) {
    throw ValidationError("skeleton is not icosahedral about axis '" + axis + "'");
  }
  return classes;
}

std::vector<Diagnostic> validate(const PolytopeSkeleton& skeleton) {
  std::vector<Diagnostic> diagnostics;
  const auto& vertices = skeleton.vertices();

  for (const Vertex& vertex : vertices) {
    if (vertex.position[0].isZero() && vertex.position[1].isZero() &&
        vertex.position[2].isZero()) {
      diagnostics.push_back(
          {"zero-ray", "vertex '" + vertex.name + "' has zero position"});
    }
  }

  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const Vec3q& u = vertices[i].position;
      const Vec3q& w = vertices[j].position;
      const Vec3q c = cross3(u, w);
      if (c[0].isZero() && c[1].isZero() && c[2].isZero() &&
          u.dot(w).sign() > 0) {
        diagnostics.push_back({"duplicate-ray",
                               "vertices '" + vertices[i].name + "' and '" +
                                   vertices[j].name + "' span the same ray"});
      }
    }
  }

  const auto& edges = skeleton.edges();
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i - 1] == edges[i]) {
      diagnostics.push_back(
          {"duplicate-edge", "edge " + edges[i].text() + " appears more than once"});
    }
  }

  for (std::size_t f = 0; f < skeleton.faces().size(); ++f) {
    const Face& face = skeleton.faces()[f];
    for (const std::string& name : face) {
      if (!skeleton.hasVertex(name)) {
        diagnostics.push_back({"dangling-face-vertex",
                               "face " + std::to_string(f) +
                                   " references unknown vertex '" + name + "'"});
      }
    }
    if (face.size() >= 2) {
      bool resolvable = true;
      for (const std::string& name : face) {
        if (!skeleton.hasVertex(name)) resolvable = false;
      }
      if (resolvable) {
        for (std::size_t k = 0; k < face.size(); ++k) {
          const std::string& u = face[k];
          const std::string& v = face[(k + 1) % face.size()];
          if (u == v || !skeleton.hasEdge(EdgeId(u, v))) {
            diagnostics.push_back({"dangling-face-edge",
                                   "face " + std::to_string(f) +
                                       " uses missing edge " + u + ":" + v});
          }
        }
      }
    }
  }

  return diagnostics;
}

}  // namespace balfan
