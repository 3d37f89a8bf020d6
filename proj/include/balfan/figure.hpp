#pragma once

#include <array>
#include <string>
#include <vector>

#include "balfan/balance.hpp"
#include "balfan/skeleton.hpp"

namespace balfan {

/// The exact values printed in the figure legends, plus the corrected
/// alpha forced by the balancing equation at the inner face.
struct FigureConstants {
  QuadraticScalar phiFig;          // (sqrt5 - 1) / 2
  QuadraticScalar beta;            // 1/2
  QuadraticScalar gamma;           // (5 + sqrt5) / 4
  QuadraticScalar alphaPrinted;    // (3 + sqrt5) / 2
  QuadraticScalar alphaCorrected;  // (3 + sqrt5) / 4 = ((1+sqrt5)/2)^2 * beta

  static FigureConstants standard();
};

enum class AlphaChoice { Printed, Corrected };

enum class DrawnClass { Outer, Spoke, Middle, InnerSpoke, Inner };

/// A node of the planar dodecahedral presentation: one maximal cone
/// (triangle) of the icosahedron fan, placed on one of four rings.
struct DrawnNode {
  char ring;                        // 'O', 'M', 'A', 'B' (radii 8, 6, 4, 2)
  int index;                        // 1..5
  std::array<std::string, 3> cone;  // sorted triangle vertices
  int angleDegrees;                 // 72*index, +36 on the A and B rings
  int radius;
};

struct DrawnEdge {
  DrawnClass cls;
  int index;      // 1..5 (Middle: 1..10, odd = M_p A_{p-1}, even = M_p A_p)
  int nodeA;      // indices into DrawnGraph::nodes
  int nodeB;
  EdgeId dual;    // the icosahedron edge this drawn edge represents
};

struct DrawnFace {
  std::vector<int> edgeIndices;  // boundary, indices into drawnEdges
  std::string dualRay;           // icosahedron vertex dual to this face
};

/// The 20-node planar presentation dual to the icosahedron fan.  Nodes are
/// triangles, drawn edges carry their dual fan edge, faces (outer pentagon,
/// inner pentagon, five upper and five lower pentagons) carry their dual ray.
struct DrawnGraph {
  PolytopeSkeleton skeleton;
  std::string axis;
  std::string antipode;
  std::vector<DrawnNode> nodes;       // O1..O5, M1..M5, A1..A5, B1..B5
  std::vector<DrawnEdge> drawnEdges;  // outer, spoke, middle, inner-spoke, inner
  std::vector<DrawnFace> faces;       // [0] outer, [1] inner, then upper, lower
};

/// Weight on drawn edges, aligned with DrawnGraph::drawnEdges.
using DrawnWeight = VectorXq;

DrawnGraph dodecahedralDrawing(const PolytopeSkeleton& icosa,
                               const std::string& axis,
                               const std::array<std::string, 3>& seed);

/// Seed defaults to the lexicographically smallest triangle containing axis.
DrawnGraph dodecahedralDrawing(const PolytopeSkeleton& icosa,
                               const std::string& axis);

/// Left panel: 1 on both polar classes, 0 on both ring classes,
/// (sqrt5-1)/2 on the equatorial class.
WeightVector figureLeftWeight(const PolytopeSkeleton& icosa,
                              const std::string& axis);

/// Right panel: the printed drawn-edge assignment transferred to fan edges;
/// the four alpha edges take the printed or the corrected value.
WeightVector figureRightWeight(const DrawnGraph& drawing, AlphaChoice choice);

/// Move values across the drawn-edge <-> fan-edge bijection.
WeightVector transferWeight(const DrawnGraph& drawing, const DrawnWeight& drawn);
DrawnWeight inverseTransferWeight(const DrawnGraph& drawing,
                                  const WeightVector& weight);

/// LaTeX rendering of an exact value, e.g. "\frac{\sqrt{5}-1}{2}".
std::string latexScalar(const QuadraticScalar& value);

struct LegendEntry {
  std::string name;  // LaTeX macro, e.g. "\\phi"
  QuadraticScalar value;
};

enum class EmitFormat { Tikz, Dot };

/// Deterministic text emission of the drawing with edge labels; values
/// matching a legend entry are shown by their symbolic name.
std::string emitFigure(const DrawnGraph& drawing, const DrawnWeight& drawn,
                       const std::vector<LegendEntry>& legend, EmitFormat format);

}  // namespace balfan
