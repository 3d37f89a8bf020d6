#include "balfan/figure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <set>
#include <sstream>

namespace balfan {

FigureConstants FigureConstants::standard() {
  FigureConstants constants{
      QuadraticScalar(Rational(-1, 2), Rational(1, 2), 5),
      QuadraticScalar(Rational(1, 2), Rational(0), 5),
      QuadraticScalar(Rational(5, 4), Rational(1, 4), 5),
      QuadraticScalar(Rational(3, 2), Rational(1, 2), 5),
      QuadraticScalar(Rational(3, 4), Rational(1, 4), 5),
  };
  return constants;
}

namespace {

using Triangle = std::array<std::string, 3>;

Triangle sortedTriangle(Triangle triangle) {
  std::sort(triangle.begin(), triangle.end());
  return triangle;
}

bool triangleAdjacent(const Triangle& a, const Triangle& b) {
  int shared = 0;
  for (const auto& name : a) {
    if (std::find(b.begin(), b.end(), name) != b.end()) ++shared;
  }
  return shared == 2;
}

std::optional<EdgeId> sharedEdge(const Triangle& a, const Triangle& b) {
  std::vector<std::string> shared;
  for (const auto& name : a) {
    if (std::find(b.begin(), b.end(), name) != b.end()) shared.push_back(name);
  }
  if (shared.size() != 2) return std::nullopt;
  return EdgeId(shared[0], shared[1]);
}

std::vector<Triangle> allTriangles(const PolytopeSkeleton& skeleton) {
  const auto& vertices = skeleton.vertices();
  std::vector<Triangle> triangles;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!skeleton.hasEdge(EdgeId(vertices[i].name, vertices[j].name))) continue;
      for (std::size_t k = j + 1; k < vertices.size(); ++k) {
        if (skeleton.hasEdge(EdgeId(vertices[i].name, vertices[k].name)) &&
            skeleton.hasEdge(EdgeId(vertices[j].name, vertices[k].name))) {
          triangles.push_back({vertices[i].name, vertices[j].name, vertices[k].name});
        }
      }
    }
  }
  std::sort(triangles.begin(), triangles.end());
  return triangles;
}

void requireIcosahedral(const PolytopeSkeleton& icosa) {
  bool regular = icosa.vertexCount() == 12 && icosa.edgeCount() == 30;
  if (regular) {
    for (const Vertex& vertex : icosa.vertices()) {
      if (icosa.degree(vertex.name) != 5) regular = false;
    }
  }
  if (!regular) {
    throw ValidationError("drawing requires an icosahedral skeleton "
                          "(12 vertices, 30 edges, degree 5)");
  }
}

}  // namespace

DrawnGraph dodecahedralDrawing(const PolytopeSkeleton& icosa,
                               const std::string& axis,
                               const std::array<std::string, 3>& seed) {
  requireIcosahedral(icosa);
  const auto antipode = antipodeOf(icosa, axis);
  if (!antipode) {
    throw ValidationError("no antipode vertex for axis '" + axis + "'");
  }

  const Triangle seedTriangle = sortedTriangle(seed);
  if (std::find(seedTriangle.begin(), seedTriangle.end(), axis) ==
      seedTriangle.end()) {
    throw ValidationError("seed triangle does not contain the axis '" + axis + "'");
  }
  const std::vector<Triangle> triangles = allTriangles(icosa);
  if (!std::binary_search(triangles.begin(), triangles.end(), seedTriangle)) {
    throw ValidationError("seed is not a triangle of the skeleton");
  }

  // Rotate the link cycle of the axis so the seed becomes O_1.
  std::vector<std::string> cycle = linkCycle(icosa, axis);
  std::set<std::string> seedPair(seedTriangle.begin(), seedTriangle.end());
  seedPair.erase(axis);
  bool rotated = false;
  for (std::size_t i = 0; i < cycle.size() && !rotated; ++i) {
    const std::set<std::string> pair{cycle[i], cycle[(i + 1) % cycle.size()]};
    if (pair == seedPair) {
      std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(i),
                  cycle.end());
      rotated = true;
    }
  }
  if (!rotated) {
    throw ValidationError("seed triangle is not consistent with the link cycle");
  }

  const auto w = [&cycle](int p) { return cycle[static_cast<std::size_t>(p % 5)]; };

  // O-ring: triangles containing the axis, indexed by the rotated cycle.
  std::array<Triangle, 5> ringO;
  for (int p = 0; p < 5; ++p) {
    ringO[static_cast<std::size_t>(p)] = sortedTriangle({axis, w(p), w(p + 1)});
  }

  const auto otherTriangle = [&triangles, &icosa](const EdgeId& edge,
                                                  const Triangle& known) {
    for (const Triangle& triangle : triangles) {
      if (triangle == known) continue;
      if (std::find(triangle.begin(), triangle.end(), edge.first) != triangle.end() &&
          std::find(triangle.begin(), triangle.end(), edge.second) != triangle.end()) {
        return triangle;
      }
    }
    throw ValidationError("edge " + edge.text() + " lies in fewer than two triangles");
  };

  // M-ring: the second triangle on each link edge of the axis.
  std::array<Triangle, 5> ringM;
  for (int p = 0; p < 5; ++p) {
    ringM[static_cast<std::size_t>(p)] =
        otherTriangle(EdgeId(w(p), w(p + 1)), ringO[static_cast<std::size_t>(p)]);
  }

  const auto inRing = [](const std::array<Triangle, 5>& ring, const Triangle& t) {
    return std::find(ring.begin(), ring.end(), t) != ring.end();
  };

  // A-ring: the unique remaining triangle adjacent to both M_p and M_{p+1}.
  std::array<Triangle, 5> ringA;
  for (int p = 0; p < 5; ++p) {
    std::optional<Triangle> found;
    for (const Triangle& triangle : triangles) {
      if (inRing(ringO, triangle) || inRing(ringM, triangle)) continue;
      if (triangleAdjacent(triangle, ringM[static_cast<std::size_t>(p)]) &&
          triangleAdjacent(triangle, ringM[static_cast<std::size_t>((p + 1) % 5)])) {
        if (found) throw ValidationError("ambiguous A-ring triangle");
        found = triangle;
      }
    }
    if (!found) throw ValidationError("missing A-ring triangle");
    ringA[static_cast<std::size_t>(p)] = *found;
  }

  // B-ring: the antipode triangle adjacent to A_p.
  std::array<Triangle, 5> ringB;
  for (int p = 0; p < 5; ++p) {
    std::optional<Triangle> found;
    for (const Triangle& triangle : triangles) {
      if (std::find(triangle.begin(), triangle.end(), *antipode) == triangle.end()) {
        continue;
      }
      if (triangleAdjacent(triangle, ringA[static_cast<std::size_t>(p)])) {
        if (found) throw ValidationError("ambiguous B-ring triangle");
        found = triangle;
      }
    }
    if (!found) throw ValidationError("missing B-ring triangle");
    ringB[static_cast<std::size_t>(p)] = *found;
  }

  DrawnGraph drawing{icosa, axis, *antipode, {}, {}, {}};
  const auto addRing = [&drawing](char ring, int radius, int angleOffset,
                                  const std::array<Triangle, 5>& triangleRing) {
    for (int p = 1; p <= 5; ++p) {
      drawing.nodes.push_back({ring, p, triangleRing[static_cast<std::size_t>(p - 1)],
                               72 * p + angleOffset, radius});
    }
  };
  addRing('O', 8, 0, ringO);
  addRing('M', 6, 0, ringM);
  addRing('A', 4, 36, ringA);
  addRing('B', 2, 36, ringB);

  const auto nodeIndex = [](char ring, int p) {
    const int base = ring == 'O' ? 0 : ring == 'M' ? 5 : ring == 'A' ? 10 : 15;
    return base + ((p - 1 + 5) % 5);
  };
  const auto addEdge = [&drawing, &nodeIndex](DrawnClass cls, int index, char ringX,
                                              int px, char ringY, int py) {
    const int a = nodeIndex(ringX, px);
    const int b = nodeIndex(ringY, py);
    const auto dual =
        sharedEdge(drawing.nodes[static_cast<std::size_t>(a)].cone,
                   drawing.nodes[static_cast<std::size_t>(b)].cone);
    if (!dual) throw ValidationError("drawn edge endpoints are not adjacent cones");
    drawing.drawnEdges.push_back({cls, index, a, b, *dual});
  };

  for (int p = 1; p <= 5; ++p) addEdge(DrawnClass::Outer, p, 'O', p, 'O', p + 1);
  for (int p = 1; p <= 5; ++p) addEdge(DrawnClass::Spoke, p, 'O', p, 'M', p);
  for (int q = 1; q <= 10; ++q) {
    const int p = (q + 1) / 2;
    if (q % 2 == 1) {
      addEdge(DrawnClass::Middle, q, 'M', p, 'A', p - 1);  // M_p -- A_{p-1}
    } else {
      addEdge(DrawnClass::Middle, q, 'M', p, 'A', p);      // M_p -- A_p
    }
  }
  for (int p = 1; p <= 5; ++p) addEdge(DrawnClass::InnerSpoke, p, 'A', p, 'B', p);
  for (int p = 1; p <= 5; ++p) addEdge(DrawnClass::Inner, p, 'B', p - 1, 'B', p);

  std::set<EdgeId> duals;
  for (const DrawnEdge& edge : drawing.drawnEdges) duals.insert(edge.dual);
  if (duals.size() != drawing.drawnEdges.size()) {
    throw ValidationError("drawn-edge duals are not distinct");
  }

  // Faces with their dual rays; the boundary's dual edges must be exactly
  // the edge star of the dual ray.
  const auto outerIdx = [](int p) { return ((p - 1 + 5) % 5); };
  const auto spokeIdx = [&outerIdx](int p) { return 5 + outerIdx(p); };
  const auto middleAIdx = [&outerIdx](int p) { return 10 + 2 * outerIdx(p) + 1; };
  const auto middleBIdx = [&outerIdx](int p) { return 10 + 2 * outerIdx(p); };
  const auto innerSpokeIdx = [&outerIdx](int p) { return 20 + outerIdx(p); };
  const auto innerIdx = [&outerIdx](int p) { return 25 + outerIdx(p); };

  const auto addFace = [&drawing, &icosa](std::vector<int> boundary) {
    std::set<std::string> common{};
    bool started = false;
    for (const int index : boundary) {
      const EdgeId& dual = drawing.drawnEdges[static_cast<std::size_t>(index)].dual;
      const std::set<std::string> endpoints{dual.first, dual.second};
      if (!started) {
        common = endpoints;
        started = true;
      } else {
        std::set<std::string> keep;
        std::set_intersection(common.begin(), common.end(), endpoints.begin(),
                              endpoints.end(), std::inserter(keep, keep.begin()));
        common = std::move(keep);
      }
    }
    if (common.size() != 1) {
      throw ValidationError("drawn face boundary has no unique dual ray");
    }
    const std::string ray = *common.begin();
    std::set<EdgeId> boundaryDuals;
    for (const int index : boundary) {
      boundaryDuals.insert(drawing.drawnEdges[static_cast<std::size_t>(index)].dual);
    }
    std::set<EdgeId> star;
    for (const EdgeId& edge : icosa.edges()) {
      if (edge.first == ray || edge.second == ray) star.insert(edge);
    }
    if (boundaryDuals != star) {
      throw ValidationError("drawn face duals do not match the edge star of '" +
                            ray + "'");
    }
    drawing.faces.push_back({std::move(boundary), ray});
  };

  addFace({outerIdx(1), outerIdx(2), outerIdx(3), outerIdx(4), outerIdx(5)});
  addFace({innerIdx(1), innerIdx(2), innerIdx(3), innerIdx(4), innerIdx(5)});
  for (int p = 1; p <= 5; ++p) {  // upper faces
    addFace({outerIdx(p), spokeIdx(p + 1 > 5 ? 1 : p + 1), middleAIdx(p),
             middleBIdx(p + 1 > 5 ? 1 : p + 1), spokeIdx(p)});
  }
  for (int p = 1; p <= 5; ++p) {  // lower faces
    const int next = p + 1 > 5 ? 1 : p + 1;
    addFace({middleBIdx(next), innerSpokeIdx(p), innerIdx(next),
             innerSpokeIdx(next), middleAIdx(next)});
  }

  return drawing;
}

DrawnGraph dodecahedralDrawing(const PolytopeSkeleton& icosa,
                               const std::string& axis) {
  requireIcosahedral(icosa);
  icosa.vertexIndex(axis);  // reject unknown axis early
  for (const Triangle& triangle : allTriangles(icosa)) {
    if (std::find(triangle.begin(), triangle.end(), axis) != triangle.end()) {
      return dodecahedralDrawing(icosa, axis, triangle);
    }
  }
  throw ValidationError("axis '" + axis + "' lies in no triangle");
}

WeightVector figureLeftWeight(const PolytopeSkeleton& icosa,
                              const std::string& axis) {
  const EdgeClassification classes = classifyEdgesByAxis(icosa, axis);
  const FigureConstants constants = FigureConstants::standard();
  WeightVector weight = WeightVector::Zero(icosa.edgeCount());
  const auto assign = [&](const std::vector<EdgeId>& edges,
                          const QuadraticScalar& value) {
    for (const EdgeId& edge : edges) weight[*icosa.edgeIndex(edge)] = value;
  };
  assign(classes.polarNorth, QuadraticScalar(1));
  assign(classes.polarSouth, QuadraticScalar(1));
  assign(classes.ringNorth, QuadraticScalar(0));
  assign(classes.ringSouth, QuadraticScalar(0));
  assign(classes.equatorial, constants.phiFig);
  return weight;
}

WeightVector figureRightWeight(const DrawnGraph& drawing, AlphaChoice choice) {
  const FigureConstants constants = FigureConstants::standard();
  const QuadraticScalar alpha = choice == AlphaChoice::Printed
                                    ? constants.alphaPrinted
                                    : constants.alphaCorrected;
  DrawnWeight drawn(static_cast<Eigen::Index>(drawing.drawnEdges.size()));
  for (std::size_t k = 0; k < drawing.drawnEdges.size(); ++k) {
    const DrawnEdge& edge = drawing.drawnEdges[k];
    QuadraticScalar value(1);
    switch (edge.cls) {
      case DrawnClass::Outer:
        value = QuadraticScalar(1);
        break;
      case DrawnClass::Spoke:
        value = edge.index == 5 ? constants.gamma : QuadraticScalar(1);
        break;
      case DrawnClass::Middle:
        if (edge.index == 1 || edge.index == 8) {
          value = constants.gamma;
        } else if (edge.index == 9 || edge.index == 10) {
          value = constants.beta;
        } else {
          value = QuadraticScalar(1);
        }
        break;
      case DrawnClass::InnerSpoke:
        value = edge.index <= 3 ? constants.gamma : alpha;
        break;
      case DrawnClass::Inner:
        if (edge.index == 1 || edge.index == 4) {
          value = alpha;
        } else if (edge.index == 2 || edge.index == 3) {
          value = constants.beta;
        } else {
          value = QuadraticScalar(0);
        }
        break;
    }
    drawn[static_cast<Eigen::Index>(k)] = value;
  }
  return transferWeight(drawing, drawn);
}

WeightVector transferWeight(const DrawnGraph& drawing, const DrawnWeight& drawn) {
  if (drawn.size() != static_cast<Eigen::Index>(drawing.drawnEdges.size())) {
    throw ValidationError("drawn weight is not total on the drawn edges");
  }
  WeightVector weight = WeightVector::Zero(drawing.skeleton.edgeCount());
  for (std::size_t k = 0; k < drawing.drawnEdges.size(); ++k) {
    weight[*drawing.skeleton.edgeIndex(drawing.drawnEdges[k].dual)] =
        drawn[static_cast<Eigen::Index>(k)];
  }
  return weight;
}

DrawnWeight inverseTransferWeight(const DrawnGraph& drawing,
                                  const WeightVector& weight) {
  if (weight.size() != drawing.skeleton.edgeCount()) {
    throw ValidationError("weight is not total on the skeleton edges");
  }
  DrawnWeight drawn(static_cast<Eigen::Index>(drawing.drawnEdges.size()));
  for (std::size_t k = 0; k < drawing.drawnEdges.size(); ++k) {
    drawn[static_cast<Eigen::Index>(k)] =
        weight[*drawing.skeleton.edgeIndex(drawing.drawnEdges[k].dual)];
  }
  return drawn;
}

namespace {

std::string latexRational(const Rational& value) {
  std::ostringstream stream;
  if (denominator(value) == 1) {
    stream << numerator(value);
  } else {
    stream << "\\frac{" << numerator(value) << "}{" << denominator(value) << "}";
  }
  return stream.str();
}

/// Numerator text for (p + r*sqrt(rad)) with integers p, r; r != 0.
std::string latexRadicalSum(const BigInt& p, const BigInt& r, std::int64_t radicand) {
  const std::string root = "\\sqrt{" + std::to_string(radicand) + "}";
  const BigInt magnitude = boost::multiprecision::abs(r);
  const std::string radical =
      (magnitude == 1 ? std::string() : magnitude.str()) + root;
  std::ostringstream stream;
  if (p == 0) {
    stream << (r < 0 ? "-" : "") << radical;
  } else if (p < 0 && r > 0) {
    stream << radical << "-" << -p;  // e.g. sqrt5 - 1
  } else {
    stream << p << (r < 0 ? "-" : "+") << radical;
  }
  return stream.str();
}

}  // namespace

std::string latexScalar(const QuadraticScalar& value) {
  if (value.isRational()) return latexRational(value.rationalPart());

  const BigInt pa = numerator(value.rationalPart());
  const BigInt qa = denominator(value.rationalPart());
  const BigInt pb = numerator(value.radicalPart());
  const BigInt qb = denominator(value.radicalPart());
  const BigInt common = boost::multiprecision::lcm(qa, qb);
  const BigInt p = pa * (common / qa);
  const BigInt r = pb * (common / qb);
  const std::string numeratorText = latexRadicalSum(p, r, value.radicand());
  if (common == 1) return numeratorText;
  return "\\frac{" + numeratorText + "}{" + common.str() + "}";
}

namespace {

std::string labelText(const QuadraticScalar& value,
                      const std::vector<LegendEntry>& legend) {
  for (const LegendEntry& entry : legend) {
    if (entry.value == value) return "$" + entry.name + "$";
  }
  if (value.isRational() && denominator(value.rationalPart()) == 1) {
    return formatScalar(value);
  }
  return "$" + latexScalar(value) + "$";
}

/// "w", "w.25", "w.5", "w.75" from a quarter-integer count.
std::string formatQuarters(int quarters) {
  std::string sign = quarters < 0 ? "-" : "";
  const int magnitude = quarters < 0 ? -quarters : quarters;
  const int whole = magnitude / 4;
  static const char* fractions[] = {"", ".25", ".5", ".75"};
  return sign + std::to_string(whole) + fractions[magnitude % 4];
}

struct LabelGroup {
  std::vector<int> indices;  // 1-based label positions
  QuadraticScalar value;
};

/// Indices grouped by value, larger groups first, ties by first position.
std::vector<LabelGroup> groupLabels(const std::vector<QuadraticScalar>& values) {
  std::vector<LabelGroup> groups;
  for (std::size_t i = 0; i < values.size(); ++i) {
    bool placed = false;
    for (LabelGroup& group : groups) {
      if (group.value == values[i]) {
        group.indices.push_back(static_cast<int>(i) + 1);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({{static_cast<int>(i) + 1}, values[i]});
  }
  std::stable_sort(groups.begin(), groups.end(),
                   [](const LabelGroup& a, const LabelGroup& b) {
                     if (a.indices.size() != b.indices.size()) {
                       return a.indices.size() > b.indices.size();
                     }
                     return a.indices.front() < b.indices.front();
                   });
  return groups;
}

/// One label class: a foreach per multi-index group, a node per singleton.
void emitLabelClass(std::ostream& out, const std::vector<QuadraticScalar>& values,
                    const std::string& position,
                    const std::vector<LegendEntry>& legend) {
  const std::string placeholder = "\\p";
  const auto substituted = [&position, &placeholder](const std::string& index) {
    std::string text = position;
    const std::size_t at = text.find(placeholder);
    text.replace(at, placeholder.size(), index);
    return text;
  };
  for (const LabelGroup& group : groupLabels(values)) {
    if (group.indices.size() == 1) {
      out << "    \\node[red] at "
          << substituted(std::to_string(group.indices.front())) << " {"
          << labelText(group.value, legend) << "};\n";
      continue;
    }
    const bool consecutive =
        group.indices.back() - group.indices.front() + 1 ==
        static_cast<int>(group.indices.size());
    std::string list;
    if (consecutive && group.indices.size() >= 4) {
      list = "{" + std::to_string(group.indices.front()) + "," +
             std::to_string(group.indices.front() + 1) + ",...," +
             std::to_string(group.indices.back()) + "}";
    } else {
      list = "{";
      for (std::size_t i = 0; i < group.indices.size(); ++i) {
        if (i > 0) list += ",";
        list += std::to_string(group.indices[i]);
      }
      list += "}";
    }
    out << "    \\foreach \\p in " << list << "\n"
        << "        \\node[red] at " << substituted(placeholder) << " {"
        << labelText(group.value, legend) << "};\n";
  }
}

std::vector<QuadraticScalar> classValues(const DrawnGraph& drawing,
                                         const DrawnWeight& drawn,
                                         DrawnClass cls) {
  std::vector<QuadraticScalar> values;
  for (std::size_t k = 0; k < drawing.drawnEdges.size(); ++k) {
    if (drawing.drawnEdges[k].cls == cls) {
      values.push_back(drawn[static_cast<Eigen::Index>(k)]);
    }
  }
  return values;
}

std::string emitTikz(const DrawnGraph& drawing, const DrawnWeight& drawn,
                     const std::vector<LegendEntry>& legend) {
  std::ostringstream out;
  out << "\\begin{tikzpicture}[scale=0.4]\n";

  // node circles, ring by ring
  for (const char* position : {"(\\p*72:8)", "(\\p*72:6)", "(\\p*72+36:4)",
                               "(\\p*72+36:2)"}) {
    out << "    \\foreach \\p in {1,2,...,5}\n"
        << "        \\draw[fill=black] " << position << " circle (.05);\n";
  }

  // edges
  out << "    \\foreach \\p in {1,2,...,5}\n"
      << "        \\draw (\\p*72:8)--(\\p*72+72:8) (\\p*72:8)--(\\p*72:6) "
         "(\\p*72:6)--(\\p*72+36:4) (\\p*72:6)--(\\p*72-36:4) "
         "(\\p*72+36:4)--(\\p*72+36:2) (\\p*72+36:2)--(\\p*72-36:2);\n";

  // labels
  emitLabelClass(out, classValues(drawing, drawn, DrawnClass::Outer),
                 "(\\p*72+36:6.8)", legend);
  emitLabelClass(out, classValues(drawing, drawn, DrawnClass::Spoke),
                 "(\\p*72+4:7)", legend);
  emitLabelClass(out, classValues(drawing, drawn, DrawnClass::Middle),
                 "(\\p*36+18:5)", legend);
  emitLabelClass(out, classValues(drawing, drawn, DrawnClass::InnerSpoke),
                 "(\\p*72+43:3)", legend);
  emitLabelClass(out, classValues(drawing, drawn, DrawnClass::Inner),
                 "(\\p*72:1.3)", legend);

  // legend box
  if (legend.size() == 1) {
    out << "    \\begin{scope}[xshift=-5cm,yshift=7cm, scale=2]\n"
        << "        \\node at (0,0) {$" << legend.front().name << "="
        << latexScalar(legend.front().value) << "$};\n"
        << "        \\draw (-1,-.5)--(-1,.5)--(1,.5)--(1,-.5)--cycle;\n"
        << "    \\end{scope}\n";
  } else if (legend.size() > 1) {
    out << "    \\begin{scope}[xshift=5.7cm,yshift=6.5cm]\n";
    const int n = static_cast<int>(legend.size());
    for (int k = 0; k < n; ++k) {
      const int quarters = 3 * (n - 1 - 2 * k);  // entries 1.5 apart, centered
      out << "        \\node[right] at (0," << formatQuarters(quarters) << ") {$"
          << legend[static_cast<std::size_t>(k)].name << "="
          << latexScalar(legend[static_cast<std::size_t>(k)].value) << "$};\n";
    }
    const std::string half = formatQuarters(3 * (n - 1) + 4);
    out << "        \\draw (0,-" << half << ")--(0," << half << ")--(4.2," << half
        << ")--(4.2,-" << half << ")--cycle;\n"
        << "    \\end{scope}\n";
  }

  out << "\\end{tikzpicture}\n";
  return out.str();
}

std::string emitDot(const DrawnGraph& drawing, const DrawnWeight& drawn) {
  std::ostringstream out;
  out << "graph dodecahedral_drawing {\n"
      << "    layout=\"neato\";\n"
      << "    node [shape=point, width=0.08];\n";
  const auto nodeName = [](const DrawnNode& node) {
    return std::string(1, node.ring) + std::to_string(node.index);
  };
  char buffer[64];
  for (const DrawnNode& node : drawing.nodes) {
    const double angle = (node.angleDegrees % 360) * 3.14159265358979323846 / 180.0;
    std::snprintf(buffer, sizeof(buffer), "%.4f,%.4f",
                  node.radius * std::cos(angle), node.radius * std::sin(angle));
    out << "    " << nodeName(node) << " [pos=\"" << buffer << "!\"];\n";
  }
  for (std::size_t k = 0; k < drawing.drawnEdges.size(); ++k) {
    const DrawnEdge& edge = drawing.drawnEdges[k];
    out << "    " << nodeName(drawing.nodes[static_cast<std::size_t>(edge.nodeA)])
        << " -- " << nodeName(drawing.nodes[static_cast<std::size_t>(edge.nodeB)])
        << " [label=\"" << formatScalar(drawn[static_cast<Eigen::Index>(k)])
        << "\", tooltip=\"" << edge.dual.text() << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string emitFigure(const DrawnGraph& drawing, const DrawnWeight& drawn,
                       const std::vector<LegendEntry>& legend, EmitFormat format) {
  if (drawn.size() != static_cast<Eigen::Index>(drawing.drawnEdges.size())) {
    throw ValidationError("drawn weight is not total on the drawn edges");
  }
  return format == EmitFormat::Tikz ? emitTikz(drawing, drawn, legend)
                                    : emitDot(drawing, drawn);
}

}  // namespace balfan
