#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "balfan/balance.hpp"
#include "balfan/figure.hpp"
#include "balfan/skeleton.hpp"
#include "support/testutil.hpp"

using balfan::AlphaChoice;
using balfan::BuiltinSolid;
using balfan::DrawnClass;
using balfan::DrawnGraph;
using balfan::DrawnWeight;
using balfan::EdgeId;
using balfan::EmitFormat;
using balfan::FigureConstants;
using balfan::LegendEntry;
using balfan::PolytopeSkeleton;
using balfan::QuadraticScalar;
using balfan::Rational;
using balfan::ValidationError;
using balfan::WeightVector;
using balfan::builtinPolytope;
using balfan::classifyEdgesByAxis;
using balfan::dodecahedralDrawing;
using balfan::edgePermutationFromVertexMap;
using balfan::emitFigure;
using balfan::figureLeftWeight;
using balfan::figureRightWeight;
using balfan::formatScalar;
using balfan::inverseTransferWeight;
using balfan::isBalanced;
using balfan::latexScalar;
using balfan::transferWeight;
using balfan::testsupport::icosaReflectionFixingAC;
using balfan::testsupport::icosaRotationAboutA;
using balfan::testsupport::randomScalar;

namespace {

std::set<std::string> edgeTexts(const std::vector<EdgeId>& edges) {
  std::set<std::string> texts;
  for (const EdgeId& edge : edges) texts.insert(edge.text());
  return texts;
}

std::set<std::string> dualTexts(const DrawnGraph& drawing, DrawnClass cls) {
  std::set<std::string> texts;
  for (const auto& edge : drawing.drawnEdges) {
    if (edge.cls == cls) texts.insert(edge.dual.text());
  }
  return texts;
}

/// Multiset of weight values by canonical text.
std::map<std::string, int> valueCounts(const WeightVector& weight) {
  std::map<std::string, int> counts;
  for (Eigen::Index e = 0; e < weight.size(); ++e) {
    ++counts[formatScalar(weight[e])];
  }
  return counts;
}

std::set<std::string> edgesIncidentTo(const PolytopeSkeleton& skeleton,
                                      const std::string& name) {
  std::set<std::string> texts;
  for (const EdgeId& edge : skeleton.edges()) {
    if (edge.first == name || edge.second == name) texts.insert(edge.text());
  }
  return texts;
}

std::string readFile(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  REQUIRE(stream.good());
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return buffer.str();
}

int countOccurrences(const std::string& text, const std::string& needle) {
  int count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("dodecahedral drawing structure", "[figure]") {
  const PolytopeSkeleton icosa = builtinPolytope(BuiltinSolid::Icosahedron);
  const DrawnGraph drawing = dodecahedralDrawing(icosa, "a");

  REQUIRE(drawing.axis == "a");
  REQUIRE(drawing.antipode == "d");
  REQUIRE(drawing.nodes.size() == 20);
  REQUIRE(drawing.drawnEdges.size() == 30);
  REQUIRE(drawing.faces.size() == 12);

  SECTION("nodes sit on the four rings in order") {
    const std::string rings = "OMAB";
    const int radii[] = {8, 6, 4, 2};
    for (int block = 0; block < 4; ++block) {
      for (int p = 1; p <= 5; ++p) {
        const auto& node = drawing.nodes[static_cast<std::size_t>(5 * block + p - 1)];
        CHECK(node.ring == rings[static_cast<std::size_t>(block)]);
        CHECK(node.index == p);
        CHECK(node.radius == radii[block]);
        const int expectedAngle = 72 * p + (block >= 2 ? 36 : 0);
        CHECK(node.angleDegrees == expectedAngle);
        // each node is a maximal cone: a sorted triangle of pairwise-adjacent rays
        CHECK(std::is_sorted(node.cone.begin(), node.cone.end()));
        CHECK(icosa.hasEdge(EdgeId(node.cone[0], node.cone[1])));
        CHECK(icosa.hasEdge(EdgeId(node.cone[0], node.cone[2])));
        CHECK(icosa.hasEdge(EdgeId(node.cone[1], node.cone[2])));
      }
    }
  }

  SECTION("drawn edges are dual to the fan edges, bijectively") {
    std::set<std::string> duals;
    for (const auto& edge : drawing.drawnEdges) {
      duals.insert(edge.dual.text());
      // the dual fan edge is the intersection of the two endpoint cones
      const auto& coneA = drawing.nodes[static_cast<std::size_t>(edge.nodeA)].cone;
      const auto& coneB = drawing.nodes[static_cast<std::size_t>(edge.nodeB)].cone;
      std::vector<std::string> shared;
      std::set_intersection(coneA.begin(), coneA.end(), coneB.begin(), coneB.end(),
                            std::back_inserter(shared));
      REQUIRE(shared.size() == 2);
      CHECK(EdgeId(shared[0], shared[1]) == edge.dual);
    }
    CHECK(duals == edgeTexts(icosa.edges()));
  }

  SECTION("drawn edge classes follow the layout order") {
    const std::vector<std::pair<DrawnClass, int>> blocks = {
        {DrawnClass::Outer, 5},
        {DrawnClass::Spoke, 5},
        {DrawnClass::Middle, 10},
        {DrawnClass::InnerSpoke, 5},
        {DrawnClass::Inner, 5}};
    std::size_t offset = 0;
    for (const auto& [cls, size] : blocks) {
      for (int k = 0; k < size; ++k) {
        const auto& edge = drawing.drawnEdges[offset + static_cast<std::size_t>(k)];
        CHECK(edge.cls == cls);
        CHECK(edge.index == k + 1);
      }
      offset += static_cast<std::size_t>(size);
    }
  }

  SECTION("drawn classes realize the axis classification") {
    const auto classes = classifyEdgesByAxis(icosa, "a");
    CHECK(dualTexts(drawing, DrawnClass::Outer) == edgeTexts(classes.polarNorth));
    CHECK(dualTexts(drawing, DrawnClass::Spoke) == edgeTexts(classes.ringNorth));
    CHECK(dualTexts(drawing, DrawnClass::Middle) == edgeTexts(classes.equatorial));
    CHECK(dualTexts(drawing, DrawnClass::InnerSpoke) ==
          edgeTexts(classes.ringSouth));
    CHECK(dualTexts(drawing, DrawnClass::Inner) == edgeTexts(classes.polarSouth));
  }

  SECTION("faces are pentagons dual to the twelve rays") {
    CHECK(drawing.faces[0].dualRay == "a");
    CHECK(drawing.faces[1].dualRay == "d");
    std::set<std::string> rays;
    std::map<int, int> edgeUse;
    for (const auto& face : drawing.faces) {
      REQUIRE(face.edgeIndices.size() == 5);
      rays.insert(face.dualRay);
      // star property: boundary duals are exactly the edges at the dual ray
      std::set<std::string> boundary;
      for (const int index : face.edgeIndices) {
        boundary.insert(
            drawing.drawnEdges[static_cast<std::size_t>(index)].dual.text());
        ++edgeUse[index];
      }
      CHECK(boundary == edgesIncidentTo(icosa, face.dualRay));
    }
    CHECK(rays.size() == 12);
    // every drawn edge borders exactly two faces
    REQUIRE(edgeUse.size() == 30);
    for (const auto& [index, uses] : edgeUse) CHECK(uses == 2);
  }
}

TEST_CASE("left-panel weight", "[figure]") {
  const PolytopeSkeleton icosa = builtinPolytope(BuiltinSolid::Icosahedron);
  const WeightVector left = figureLeftWeight(icosa, "a");
  const FigureConstants constants = FigureConstants::standard();

  REQUIRE(isBalanced(icosa, left).balanced);

  const auto counts = valueCounts(left);
  CHECK(counts == std::map<std::string, int>{
                      {"0", 10}, {"1", 10}, {formatScalar(constants.phiFig), 10}});

  const auto classes = classifyEdgesByAxis(icosa, "a");
  for (const EdgeId& edge : classes.polarNorth) {
    CHECK(left[*icosa.edgeIndex(edge)] == QuadraticScalar(1));
  }
  for (const EdgeId& edge : classes.polarSouth) {
    CHECK(left[*icosa.edgeIndex(edge)] == QuadraticScalar(1));
  }
  for (const EdgeId& edge : classes.ringNorth) {
    CHECK(left[*icosa.edgeIndex(edge)].isZero());
  }
  for (const EdgeId& edge : classes.ringSouth) {
    CHECK(left[*icosa.edgeIndex(edge)].isZero());
  }
  for (const EdgeId& edge : classes.equatorial) {
    CHECK(left[*icosa.edgeIndex(edge)] == constants.phiFig);
  }

  SECTION("invariant under the axis symmetries") {
    for (const auto& vertexMap :
         {icosaRotationAboutA(), icosaReflectionFixingAC()}) {
      const auto permutation = edgePermutationFromVertexMap(icosa, vertexMap);
      for (Eigen::Index e = 0; e < left.size(); ++e) {
        REQUIRE(left[permutation[static_cast<std::size_t>(e)]] == left[e]);
      }
    }
  }
}

TEST_CASE("right-panel weight, corrected and printed", "[figure]") {
  const PolytopeSkeleton icosa = builtinPolytope(BuiltinSolid::Icosahedron);
  const DrawnGraph drawing = dodecahedralDrawing(icosa, "a");
  const FigureConstants constants = FigureConstants::standard();
  const std::set<std::string> alphaEdges = {"d:f", "d:l", "f:h", "h:l"};

  const WeightVector corrected =
      figureRightWeight(drawing, AlphaChoice::Corrected);
  const WeightVector printed = figureRightWeight(drawing, AlphaChoice::Printed);

  SECTION("the corrected assignment balances with support 29") {
    REQUIRE(isBalanced(icosa, corrected).balanced);
    std::vector<std::string> zeroEdges;
    for (Eigen::Index e = 0; e < corrected.size(); ++e) {
      if (corrected[e].isZero()) {
        zeroEdges.push_back(icosa.edges()[static_cast<std::size_t>(e)].text());
      }
    }
    CHECK(zeroEdges == std::vector<std::string>{"d:h"});

    CHECK(valueCounts(corrected) ==
          std::map<std::string, int>{
              {"0", 1},
              {"1", 15},
              {formatScalar(constants.beta), 4},
              {formatScalar(constants.gamma), 6},
              {formatScalar(constants.alphaCorrected), 4}});
  }

  SECTION("the printed assignment fails exactly at the four lower rays") {
    const auto verdict = isBalanced(icosa, printed);
    REQUIRE_FALSE(verdict.balanced);
    std::set<std::string> failing;
    for (const auto& failure : verdict.failures) failing.insert(failure.vertex);
    CHECK(failing == std::set<std::string>{"d", "f", "h", "l"});
  }

  SECTION("the two choices differ exactly on the alpha edges") {
    for (Eigen::Index e = 0; e < corrected.size(); ++e) {
      const std::string text = icosa.edges()[static_cast<std::size_t>(e)].text();
      if (alphaEdges.count(text) > 0) {
        CHECK(printed[e] == constants.alphaPrinted);
        CHECK(corrected[e] == constants.alphaCorrected);
      } else {
        CHECK(printed[e] == corrected[e]);
      }
    }
  }

  SECTION("subtracting the constant weight leaves a small balanced support") {
    const WeightVector difference =
        corrected - WeightVector::Constant(corrected.size(), QuadraticScalar(1));
    REQUIRE(isBalanced(icosa, difference).balanced);
    Eigen::Index support = 0;
    for (Eigen::Index e = 0; e < difference.size(); ++e) {
      if (!difference[e].isZero()) ++support;
    }
    CHECK(support == 15);
  }
}

TEST_CASE("weights transfer across the duality both ways", "[figure]") {
  const PolytopeSkeleton icosa = builtinPolytope(BuiltinSolid::Icosahedron);
  const DrawnGraph drawing = dodecahedralDrawing(icosa, "a");
  std::mt19937 rng(4242);

  for (int iteration = 0; iteration < 25; ++iteration) {
    DrawnWeight drawn(30);
    for (Eigen::Index e = 0; e < 30; ++e) drawn[e] = randomScalar(rng);
    const WeightVector onFan = transferWeight(drawing, drawn);
    const DrawnWeight back = inverseTransferWeight(drawing, onFan);
    for (Eigen::Index e = 0; e < 30; ++e) REQUIRE(back[e] == drawn[e]);
  }

  // transferred values land on the dual fan edge
  DrawnWeight indicator = DrawnWeight::Zero(30);
  indicator[7] = QuadraticScalar(3);
  const WeightVector moved = transferWeight(drawing, indicator);
  const EdgeId dual = drawing.drawnEdges[7].dual;
  for (Eigen::Index e = 0; e < moved.size(); ++e) {
    const bool isDual = e == *icosa.edgeIndex(dual);
    CHECK(moved[e] == (isDual ? QuadraticScalar(3) : QuadraticScalar(0)));
  }

  CHECK_THROWS_AS(transferWeight(drawing, DrawnWeight::Zero(29)),
                  ValidationError);
}

TEST_CASE("figure weights do not depend on the drawing choices", "[figure]") {
  const PolytopeSkeleton icosa = builtinPolytope(BuiltinSolid::Icosahedron);
  for (const std::string axis : {"a", "c", "j"}) {
    INFO("axis " << axis);
    const WeightVector left = figureLeftWeight(icosa, axis);
    CHECK(isBalanced(icosa, left).balanced);
    CHECK(valueCounts(left).at("0") == 10);

    const DrawnGraph drawing = dodecahedralDrawing(icosa, axis);
    const WeightVector corrected =
        figureRightWeight(drawing, AlphaChoice::Corrected);
    CHECK(isBalanced(icosa, corrected).balanced);

    // the unique zero edge lies at the antipode
    const auto classes = classifyEdgesByAxis(icosa, axis);
    const auto south = edgeTexts(classes.polarSouth);
    int zeros = 0;
    for (Eigen::Index e = 0; e < corrected.size(); ++e) {
      if (corrected[e].isZero()) {
        ++zeros;
        CHECK(south.count(icosa.edges()[static_cast<std::size_t>(e)].text()) == 1);
      }
    }
    CHECK(zeros == 1);
  }

  SECTION("an explicit seed cone is honored") {
    const DrawnGraph drawing = dodecahedralDrawing(icosa, "a", {"a", "e", "i"});
    CHECK(drawing.nodes[0].cone == std::array<std::string, 3>{"a", "e", "i"});
    CHECK(isBalanced(icosa,
                     figureRightWeight(drawing, AlphaChoice::Corrected))
              .balanced);
  }

  SECTION("bad axes and seeds are rejected") {
    CHECK_THROWS_AS(dodecahedralDrawing(icosa, "zz"), ValidationError);
    CHECK_THROWS_AS(dodecahedralDrawing(icosa, "a", {"b", "c", "d"}),
                    ValidationError);
    CHECK_THROWS_AS(
        dodecahedralDrawing(builtinPolytope(BuiltinSolid::Octahedron), "a"),
        ValidationError);
  }
}

TEST_CASE("exact values render to LaTeX", "[figure]") {
  const FigureConstants constants = FigureConstants::standard();
  CHECK(latexScalar(constants.phiFig) == "\\frac{\\sqrt{5}-1}{2}");
  CHECK(latexScalar(constants.beta) == "\\frac{1}{2}");
  CHECK(latexScalar(constants.gamma) == "\\frac{5+\\sqrt{5}}{4}");
  CHECK(latexScalar(constants.alphaPrinted) == "\\frac{3+\\sqrt{5}}{2}");
  CHECK(latexScalar(constants.alphaCorrected) == "\\frac{3+\\sqrt{5}}{4}");
  CHECK(latexScalar(QuadraticScalar(1)) == "1");
  CHECK(latexScalar(QuadraticScalar(-2)) == "-2");
  CHECK(latexScalar(QuadraticScalar(Rational(0), Rational(1))) == "\\sqrt{5}");
  CHECK(latexScalar(QuadraticScalar(Rational(0), Rational(-2))) ==
        "-2\\sqrt{5}");
  CHECK(latexScalar(QuadraticScalar(Rational(1), Rational(1))) ==
        "1+\\sqrt{5}");
  CHECK(latexScalar(QuadraticScalar(Rational(1), Rational(-1))) ==
        "1-\\sqrt{5}");
}

TEST_CASE("figure emission matches the frozen panels", "[figure]") {
  const PolytopeSkeleton icosa = builtinPolytope(BuiltinSolid::Icosahedron);
  const DrawnGraph drawing = dodecahedralDrawing(icosa, "a");
  const FigureConstants constants = FigureConstants::standard();

  const std::vector<LegendEntry> leftLegend = {{"\\phi", constants.phiFig}};
  const std::vector<LegendEntry> rightLegend = {
      {"\\alpha", constants.alphaCorrected},
      {"\\beta", constants.beta},
      {"\\gamma", constants.gamma}};

  const DrawnWeight leftDrawn =
      inverseTransferWeight(drawing, figureLeftWeight(icosa, "a"));
  const DrawnWeight rightDrawn = inverseTransferWeight(
      drawing, figureRightWeight(drawing, AlphaChoice::Corrected));

  SECTION("TikZ output is byte-stable and equals the goldens") {
    const std::string left =
        emitFigure(drawing, leftDrawn, leftLegend, EmitFormat::Tikz);
    CHECK(left == emitFigure(drawing, leftDrawn, leftLegend, EmitFormat::Tikz));
    CHECK(left == readFile(std::string(BALFAN_FIXTURES_DIR) +
                           "/figure_left.tikz"));

    const std::string right =
        emitFigure(drawing, rightDrawn, rightLegend, EmitFormat::Tikz);
    CHECK(right == readFile(std::string(BALFAN_FIXTURES_DIR) +
                            "/figure_right.tikz"));
  }

  SECTION("DOT output lists every node and drawn edge") {
    const std::string dot =
        emitFigure(drawing, leftDrawn, leftLegend, EmitFormat::Dot);
    CHECK(dot == readFile(std::string(BALFAN_FIXTURES_DIR) +
                          "/figure_left.dot"));
    CHECK(countOccurrences(dot, " -- ") == 30);
    CHECK(countOccurrences(dot, "[pos=") == 20);
    CHECK(countOccurrences(dot, "tooltip=") == 30);
    CHECK(dot.find("graph dodecahedral_drawing {") == 0);

    const std::string rightDot =
        emitFigure(drawing, rightDrawn, rightLegend, EmitFormat::Dot);
    CHECK(rightDot == readFile(std::string(BALFAN_FIXTURES_DIR) +
                               "/figure_right.dot"));
  }
}
