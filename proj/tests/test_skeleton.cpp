#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "balfan/skeleton.hpp"

using balfan::BuiltinSolid;
using balfan::EdgeClassification;
using balfan::EdgeId;
using balfan::PolytopeSkeleton;
using balfan::QuadraticScalar;
using balfan::Rational;
using balfan::ValidationError;
using balfan::Vec3q;
using balfan::Vertex;
using balfan::antipodeOf;
using balfan::builtinPolytope;
using balfan::classifyEdgesByAxis;
using balfan::edgesFromSquaredDistance;
using balfan::linkCycle;
using balfan::solidName;
using balfan::validate;

namespace {

bool adjacent(const PolytopeSkeleton& skeleton, const std::string& u,
              const std::string& v) {
  return skeleton.hasEdge(EdgeId(u, v));
}

std::vector<std::string> codes(const PolytopeSkeleton& skeleton) {
  std::vector<std::string> result;
  for (const auto& diagnostic : validate(skeleton)) result.push_back(diagnostic.code);
  return result;
}

}  // namespace

TEST_CASE("edge identifiers are canonical", "[skeleton]") {
  CHECK(EdgeId("b", "a") == EdgeId("a", "b"));
  CHECK(EdgeId("b", "a").text() == "a:b");
  CHECK(EdgeId("a", "b") < EdgeId("a", "c"));
  CHECK_THROWS_AS(EdgeId("a", "a"), ValidationError);
}

TEST_CASE("builtin solids have the platonic counts", "[skeleton]") {
  struct Expectation {
    BuiltinSolid solid;
    Eigen::Index vertices;
    Eigen::Index edges;
    Eigen::Index degree;
  };
  const std::vector<Expectation> expectations = {
      {BuiltinSolid::Tetrahedron, 4, 6, 3},  {BuiltinSolid::Cube, 8, 12, 3},
      {BuiltinSolid::Octahedron, 6, 12, 4},  {BuiltinSolid::Icosahedron, 12, 30, 5},
      {BuiltinSolid::Dodecahedron, 20, 30, 3}};
  for (const Expectation& expected : expectations) {
    const PolytopeSkeleton skeleton = builtinPolytope(expected.solid);
    INFO(solidName(expected.solid));
    CHECK(skeleton.vertexCount() == expected.vertices);
    CHECK(skeleton.edgeCount() == expected.edges);
    for (const Vertex& vertex : skeleton.vertices()) {
      CHECK(skeleton.degree(vertex.name) == expected.degree);
    }
    CHECK(validate(skeleton).empty());
    // handshake: sum of degrees = twice the edges
    Eigen::Index total = 0;
    for (const Vertex& vertex : skeleton.vertices()) {
      total += skeleton.degree(vertex.name);
    }
    CHECK(total == 2 * expected.edges);
  }
  CHECK(builtinPolytope("icosahedron").vertexCount() == 12);
  CHECK_THROWS_AS(builtinPolytope("rhombicuboctahedron"), ValidationError);
}

TEST_CASE("edge scan by squared distance", "[skeleton]") {
  const PolytopeSkeleton cube = builtinPolytope(BuiltinSolid::Cube);
  CHECK(edgesFromSquaredDistance(cube, QuadraticScalar(3)).empty());
  CHECK(edgesFromSquaredDistance(cube, QuadraticScalar(4)).size() == 12);
  // face diagonals of the cube
  CHECK(edgesFromSquaredDistance(cube, QuadraticScalar(8)).size() == 12);
  CHECK_THROWS_AS(edgesFromSquaredDistance(cube, QuadraticScalar(0)),
                  ValidationError);
  CHECK_THROWS_AS(edgesFromSquaredDistance(cube, QuadraticScalar(-4)),
                  ValidationError);

  const PolytopeSkeleton icosa = builtinPolytope(BuiltinSolid::Icosahedron);
  CHECK(edgesFromSquaredDistance(icosa, QuadraticScalar(4)).size() == 30);
}

TEST_CASE("link cycles order neighbors around the ray", "[skeleton]") {
  const PolytopeSkeleton icosa = builtinPolytope(BuiltinSolid::Icosahedron);
  const std::vector<std::string> cycleA = linkCycle(icosa, "a");
  CHECK(cycleA == std::vector<std::string>{"c", "i", "e", "g", "k"});
  // every neighbor exactly once, consecutive neighbors adjacent (pentagon)
  for (const Vertex& vertex : icosa.vertices()) {
    const std::vector<std::string> cycle = linkCycle(icosa, vertex.name);
    REQUIRE(cycle.size() == 5);
    std::set<std::string> unique(cycle.begin(), cycle.end());
    REQUIRE(unique.size() == 5);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      REQUIRE(adjacent(icosa, cycle[k], cycle[(k + 1) % cycle.size()]));
    }
  }

  const PolytopeSkeleton octa = builtinPolytope(BuiltinSolid::Octahedron);
  const std::vector<std::string> cycleOcta = linkCycle(octa, "a");
  REQUIRE(cycleOcta.size() == 4);
  CHECK(cycleOcta.front() == "c");  // anchor: smallest neighbor name
  for (std::size_t k = 0; k < 4; ++k) {
    // square vertex figure: consecutive link vertices adjacent, opposite not
    CHECK(adjacent(octa, cycleOcta[k], cycleOcta[(k + 1) % 4]));
    CHECK_FALSE(adjacent(octa, cycleOcta[k], cycleOcta[(k + 2) % 4]));
  }

  CHECK_THROWS_AS(linkCycle(icosa, "nope"), ValidationError);
}

TEST_CASE("link cycle order is geometric, not name-dependent", "[skeleton]") {
  const PolytopeSkeleton icosa = builtinPolytope(BuiltinSolid::Icosahedron);
  // rename every vertex so the lexicographic order reverses
  std::map<std::string, std::string> rename;
  const std::string fresh[] = {"t09", "t08", "t07", "t06", "t05", "t04",
                               "t03", "t02", "t01", "t12", "t11", "t10"};
  for (std::size_t i = 0; i < icosa.vertices().size(); ++i) {
    rename[icosa.vertices()[i].name] = fresh[i];
  }
  std::vector<Vertex> vertices;
  for (const Vertex& vertex : icosa.vertices()) {
    vertices.push_back({rename[vertex.name], vertex.position});
  }
  std::vector<EdgeId> edges;
  for (const EdgeId& edge : icosa.edges()) {
    edges.emplace_back(rename[edge.first], rename[edge.second]);
  }
  const PolytopeSkeleton renamed(vertices, edges);

  for (const Vertex& vertex : icosa.vertices()) {
    std::vector<std::string> original = linkCycle(icosa, vertex.name);
    std::vector<std::string> mapped;
    for (const std::string& name : linkCycle(renamed, rename[vertex.name])) {
      // translate back through the inverse renaming
      for (const auto& [oldName, newName] : rename) {
        if (newName == name) mapped.push_back(oldName);
      }
    }
    REQUIRE(mapped.size() == original.size());
    // same cyclic order: some rotation of the original cycle
    bool isRotation = false;
    for (std::size_t shift = 0; shift < original.size() && !isRotation; ++shift) {
      std::vector<std::string> rotated(original.begin(), original.end());
      std::rotate(rotated.begin(), rotated.begin() + static_cast<long>(shift),
                  rotated.end());
      isRotation = rotated == mapped;
    }
    REQUIRE(isRotation);
  }
}

TEST_CASE("antipodes", "[skeleton]") {
  const PolytopeSkeleton icosa = builtinPolytope(BuiltinSolid::Icosahedron);
  CHECK(antipodeOf(icosa, "a") == "d");
  CHECK(antipodeOf(icosa, "d") == "a");
  CHECK(antipodeOf(icosa, "e") == "h");
  const PolytopeSkeleton tetra = builtinPolytope(BuiltinSolid::Tetrahedron);
  CHECK_FALSE(antipodeOf(tetra, "a").has_value());
}

TEST_CASE("edge classification by axis", "[skeleton]") {
  const PolytopeSkeleton icosa = builtinPolytope(BuiltinSolid::Icosahedron);
  const EdgeClassification classes = classifyEdgesByAxis(icosa, "a");
  CHECK(classes.polarNorth.size() == 5);
  CHECK(classes.ringNorth.size() == 5);
  CHECK(classes.equatorial.size() == 10);
  CHECK(classes.ringSouth.size() == 5);
  CHECK(classes.polarSouth.size() == 5);

  std::set<EdgeId> all;
  for (const auto* group : {&classes.polarNorth, &classes.ringNorth,
                            &classes.equatorial, &classes.ringSouth,
                            &classes.polarSouth}) {
    all.insert(group->begin(), group->end());
  }
  CHECK(all.size() == 30);  // a partition of the edge set

  for (const EdgeId& edge : classes.polarNorth) {
    CHECK((edge.first == "a" || edge.second == "a"));
  }
  for (const EdgeId& edge : classes.polarSouth) {
    CHECK((edge.first == "d" || edge.second == "d"));
  }
  // ring-north edges connect two neighbors of the axis
  for (const EdgeId& edge : classes.ringNorth) {
    CHECK(adjacent(icosa, "a", edge.first));
    CHECK(adjacent(icosa, "a", edge.second));
  }

  const PolytopeSkeleton octa = builtinPolytope(BuiltinSolid::Octahedron);
  CHECK_THROWS_AS(classifyEdgesByAxis(octa, "a"), ValidationError);
}

TEST_CASE("constructor rejects malformed input", "[skeleton]") {
  const Vec3q e1{QuadraticScalar(1), QuadraticScalar(0), QuadraticScalar(0)};
  const Vec3q e2{QuadraticScalar(0), QuadraticScalar(1), QuadraticScalar(0)};
  CHECK_THROWS_AS(PolytopeSkeleton({{"a", e1}, {"a", e2}}, {}), ValidationError);
  CHECK_THROWS_AS(PolytopeSkeleton({{"a", e1}}, {EdgeId("a", "b")}),
                  ValidationError);
}

TEST_CASE("validate reports structural diagnostics", "[skeleton]") {
  const Vec3q zero{QuadraticScalar(0), QuadraticScalar(0), QuadraticScalar(0)};
  const Vec3q e1{QuadraticScalar(1), QuadraticScalar(0), QuadraticScalar(0)};
  const Vec3q e1Doubled{QuadraticScalar(2), QuadraticScalar(0), QuadraticScalar(0)};
  const Vec3q e2{QuadraticScalar(0), QuadraticScalar(1), QuadraticScalar(0)};

  SECTION("zero ray") {
    const PolytopeSkeleton skeleton({{"o", zero}}, {});
    const auto diagnostics = validate(skeleton);
    REQUIRE(diagnostics.size() == 1);
    CHECK(diagnostics.front().code == "zero-ray");
    CHECK(diagnostics.front().message.find("'o'") != std::string::npos);
  }
  SECTION("duplicate ray, same direction only") {
    const PolytopeSkeleton skeleton({{"a", e1}, {"b", e1Doubled}}, {});
    CHECK(codes(skeleton) == std::vector<std::string>{"duplicate-ray"});
    // opposite rays are fine
    const Vec3q minus = -e1;
    const PolytopeSkeleton opposite({{"a", e1}, {"b", minus}}, {});
    CHECK(validate(opposite).empty());
  }
  SECTION("duplicate edge") {
    const PolytopeSkeleton skeleton({{"a", e1}, {"b", e2}},
                                    {EdgeId("a", "b"), EdgeId("b", "a")});
    CHECK(codes(skeleton) == std::vector<std::string>{"duplicate-edge"});
  }
  SECTION("dangling face references") {
    const PolytopeSkeleton withVertexGap({{"a", e1}, {"b", e2}},
                                         {EdgeId("a", "b")}, {{"a", "zz"}});
    auto seen = codes(withVertexGap);
    CHECK(std::count(seen.begin(), seen.end(), "dangling-face-vertex") == 1);

    const PolytopeSkeleton withEdgeGap(
        {{"a", e1},
         {"b", e2},
         {"c", Vec3q{QuadraticScalar(0), QuadraticScalar(0), QuadraticScalar(1)}}},
        {EdgeId("a", "b")}, {{"a", "b", "c"}});
    seen = codes(withEdgeGap);
    CHECK(std::count(seen.begin(), seen.end(), "dangling-face-edge") >= 1);
  }
}
