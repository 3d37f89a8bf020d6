#include "balfan/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "balfan/balance.hpp"
#include "balfan/figure.hpp"
#include "balfan/io.hpp"
#include "balfan/quadratic.hpp"
#include "balfan/skeleton.hpp"

namespace balfan {

namespace {

using Json = nlohmann::ordered_json;

struct GlobalOptions {
  bool records = false;
  int approx = 0;
  std::int64_t radicand = 5;
  bool lenient = false;
};

std::string scalarText(const QuadraticScalar& value, const GlobalOptions& opts) {
  std::string text = formatScalar(value);
  if (opts.approx > 0) text += "~" + toDecimal(value, opts.approx);
  return text;
}

PolytopeSkeleton loadSkeleton(const std::string& path, const GlobalOptions& opts,
                              std::ostream& err) {
  std::ifstream input(path);
  if (!input) throw Error("cannot open skeleton file: " + path);
  PolytopeSkeleton skeleton = readSkeleton(input, opts.radicand, !opts.lenient);
  if (opts.lenient) {
    for (const Diagnostic& diagnostic : validate(skeleton)) {
      err << "warning: " << path << ": " << diagnostic.message << "\n";
    }
  }
  return skeleton;
}

WeightVector loadWeight(const std::string& path, const PolytopeSkeleton& skeleton) {
  std::ifstream input(path);
  if (!input) throw Error("cannot open weight file: " + path);
  return readWeight(input, skeleton);
}

PartialWeight loadPartialWeight(const std::string& path,
                                const PolytopeSkeleton& skeleton) {
  std::ifstream input(path);
  if (!input) throw Error("cannot open pin file: " + path);
  return readPartialWeight(input, skeleton);
}

EdgeId parseEdgeArgument(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size() ||
      text.find(':', colon + 1) != std::string::npos) {
    throw ParseError("edge argument must be <name1>:<name2>, got '" + text + "'",
                     0);
  }
  return EdgeId(text.substr(0, colon), text.substr(colon + 1));
}

/// One line per basis row: nonzero entries as `edge=value`.
std::string basisRowText(const PolytopeSkeleton& skeleton, const MatrixXq& rows,
                         Eigen::Index row, const GlobalOptions& opts) {
  std::ostringstream line;
  bool first = true;
  for (Eigen::Index e = 0; e < rows.cols(); ++e) {
    if (rows(row, e).isZero()) continue;
    if (!first) line << " ";
    first = false;
    line << skeleton.edges()[static_cast<std::size_t>(e)].text() << "="
         << scalarText(rows(row, e), opts);
  }
  if (first) line << "0";
  return line.str();
}

Json basisRowsRecord(const PolytopeSkeleton& skeleton, const MatrixXq& rows) {
  Json list = Json::array();
  for (Eigen::Index row = 0; row < rows.rows(); ++row) {
    Json entry = Json::object();
    for (Eigen::Index e = 0; e < rows.cols(); ++e) {
      if (rows(row, e).isZero()) continue;
      entry[skeleton.edges()[static_cast<std::size_t>(e)].text()] =
          formatScalar(rows(row, e));
    }
    list.push_back(std::move(entry));
  }
  return list;
}

Json weightRecord(const PolytopeSkeleton& skeleton, const WeightVector& weight) {
  Json entry = Json::object();
  for (Eigen::Index e = 0; e < weight.size(); ++e) {
    entry[skeleton.edges()[static_cast<std::size_t>(e)].text()] =
        formatScalar(weight[e]);
  }
  return entry;
}

void emitRecord(std::ostream& out, const Json& record) {
  out << record.dump() << "\n";
}

void writeWeightLines(const PolytopeSkeleton& skeleton, const WeightVector& weight,
                      const GlobalOptions& opts, std::ostream& out) {
  for (Eigen::Index e = 0; e < weight.size(); ++e) {
    const EdgeId& edge = skeleton.edges()[static_cast<std::size_t>(e)];
    out << "w " << edge.first << " " << edge.second << " "
        << scalarText(weight[e], opts) << "\n";
  }
}

int runPolytope(const std::string& name, const std::string& outPath,
                const GlobalOptions& opts, std::ostream& out) {
  const PolytopeSkeleton skeleton = builtinPolytope(name);
  if (!outPath.empty()) {
    std::ofstream file(outPath);
    if (!file) throw Error("cannot open output file: " + outPath);
    writeSkeleton(skeleton, file);
  }
  if (opts.records) {
    Json record{{"command", "polytope"},
                {"name", name},
                {"radicand", skeleton.radicand()},
                {"vertexCount", skeleton.vertexCount()},
                {"edgeCount", skeleton.edgeCount()}};
    if (outPath.empty()) {
      Json vertices = Json::array();
      for (const Vertex& vertex : skeleton.vertices()) {
        vertices.push_back(Json{{"name", vertex.name},
                                {"position",
                                 {formatScalar(vertex.position[0]),
                                  formatScalar(vertex.position[1]),
                                  formatScalar(vertex.position[2])}}});
      }
      Json edges = Json::array();
      for (const EdgeId& edge : skeleton.edges()) edges.push_back(edge.text());
      record["vertices"] = std::move(vertices);
      record["edges"] = std::move(edges);
    } else {
      record["out"] = outPath;
    }
    emitRecord(out, record);
  } else if (outPath.empty()) {
    writeSkeleton(skeleton, out);
  }
  return 0;
}

int runDim(const PolytopeSkeleton& skeleton, const GlobalOptions& opts,
           std::ostream& out) {
  const MatrixXq basis = weightSpace(skeleton);
  if (opts.records) {
    emitRecord(out, Json{{"command", "dim"}, {"dimension", basis.rows()}});
  } else {
    out << basis.rows() << "\n";
  }
  return 0;
}

int runBasis(const PolytopeSkeleton& skeleton, const GlobalOptions& opts,
             std::ostream& out) {
  const MatrixXq basis = weightSpace(skeleton);
  if (opts.records) {
    emitRecord(out, Json{{"command", "basis"},
                         {"dimension", basis.rows()},
                         {"basis", basisRowsRecord(skeleton, basis)}});
  } else {
    out << "dimension " << basis.rows() << "\n";
    for (Eigen::Index row = 0; row < basis.rows(); ++row) {
      out << row << ": " << basisRowText(skeleton, basis, row, opts) << "\n";
    }
  }
  return 0;
}

int runCheck(const PolytopeSkeleton& skeleton, const WeightVector& weight,
             const GlobalOptions& opts, std::ostream& out) {
  const BalanceVerdict verdict = isBalanced(skeleton, weight);
  if (opts.records) {
    Json failures = Json::array();
    for (const VertexResidual& failure : verdict.failures) {
      failures.push_back(Json{{"vertex", failure.vertex},
                              {"residual",
                               {formatScalar(failure.residual[0]),
                                formatScalar(failure.residual[1]),
                                formatScalar(failure.residual[2])}}});
    }
    emitRecord(out, Json{{"command", "check"},
                         {"balanced", verdict.balanced},
                         {"failures", std::move(failures)}});
  } else if (verdict.balanced) {
    out << "balanced\n";
  } else {
    out << "unbalanced\n";
    for (const VertexResidual& failure : verdict.failures) {
      out << failure.vertex << " " << scalarText(failure.residual[0], opts) << " "
          << scalarText(failure.residual[1], opts) << " "
          << scalarText(failure.residual[2], opts) << "\n";
    }
  }
  return verdict.balanced ? 0 : 1;
}

int runSolve(const PolytopeSkeleton& skeleton, const std::string& pinPath,
             const std::vector<std::string>& zeroArgs, const GlobalOptions& opts,
             std::ostream& out) {
  std::vector<std::pair<EdgeId, QuadraticScalar>> pins;
  std::vector<EdgeId> zeros;
  if (!pinPath.empty()) {
    const PartialWeight partial = loadPartialWeight(pinPath, skeleton);
    pins = partial.entries;
    if (partial.defaultZero) {
      for (const EdgeId& edge : skeleton.edges()) {
        const bool pinned =
            std::any_of(pins.begin(), pins.end(),
                        [&edge](const auto& pin) { return pin.first == edge; });
        if (!pinned) zeros.push_back(edge);
      }
    }
  }
  for (const std::string& zeroArg : zeroArgs) {
    zeros.push_back(parseEdgeArgument(zeroArg));
  }

  const std::optional<AffineSolutionSet> solution =
      constrainedSolve(skeleton, pins, zeros);
  if (!solution) {
    if (opts.records) {
      emitRecord(out, Json{{"command", "solve"}, {"feasible", false}});
    } else {
      out << "infeasible\n";
    }
    return 0;
  }
  if (opts.records) {
    emitRecord(out,
               Json{{"command", "solve"},
                    {"feasible", true},
                    {"dimension", solution->dimension()},
                    {"particular", weightRecord(skeleton, solution->particular)},
                    {"homogeneous", basisRowsRecord(skeleton, solution->homogeneous)}});
  } else {
    out << "feasible\n";
    out << "dimension " << solution->dimension() << "\n";
    writeWeightLines(skeleton, solution->particular, opts, out);
    for (Eigen::Index row = 0; row < solution->homogeneous.rows(); ++row) {
      out << "h " << row << ": "
          << basisRowText(skeleton, solution->homogeneous, row, opts) << "\n";
    }
  }
  return 0;
}

int runScanSupport(const PolytopeSkeleton& skeleton, const GlobalOptions& opts,
                   std::ostream& out) {
  const std::vector<bool> feasible = supportScan(skeleton);
  const auto count = std::count(feasible.begin(), feasible.end(), true);
  if (opts.records) {
    Json edges = Json::array();
    for (std::size_t e = 0; e < feasible.size(); ++e) {
      edges.push_back(Json{{"edge", skeleton.edges()[e].text()},
                           {"feasible", static_cast<bool>(feasible[e])}});
    }
    emitRecord(out, Json{{"command", "scan-support"},
                         {"total", feasible.size()},
                         {"feasibleCount", count},
                         {"edges", std::move(edges)}});
  } else {
    for (std::size_t e = 0; e < feasible.size(); ++e) {
      out << skeleton.edges()[e].text() << " "
          << (feasible[e] ? "feasible" : "infeasible") << "\n";
    }
    out << "feasible " << count << " of " << feasible.size() << "\n";
  }
  return 0;
}

int runFigure(const std::string& panel, const std::string& alphaArg,
              const std::string& format, const GlobalOptions& opts,
              std::ostream& out, std::ostream& err) {
  const PolytopeSkeleton icosa = builtinPolytope(BuiltinSolid::Icosahedron);
  const DrawnGraph drawing = dodecahedralDrawing(icosa, "a");
  const FigureConstants constants = FigureConstants::standard();

  WeightVector fanWeight;
  std::vector<LegendEntry> legend;
  if (panel == "left") {
    fanWeight = figureLeftWeight(icosa, drawing.axis);
    legend = {{"\\phi", constants.phiFig}};
  } else {
    const AlphaChoice choice =
        alphaArg == "printed" ? AlphaChoice::Printed : AlphaChoice::Corrected;
    fanWeight = figureRightWeight(drawing, choice);
    const QuadraticScalar& alpha = choice == AlphaChoice::Printed
                                       ? constants.alphaPrinted
                                       : constants.alphaCorrected;
    legend = {{"\\alpha", alpha},
              {"\\beta", constants.beta},
              {"\\gamma", constants.gamma}};
    if (choice == AlphaChoice::Corrected) {
      err << "note: right panel uses alpha = "
          << formatScalar(constants.alphaCorrected)
          << " (corrected); the printed legend value alpha = "
          << formatScalar(constants.alphaPrinted) << " does not balance\n";
    } else {
      err << "note: right panel uses alpha = "
          << formatScalar(constants.alphaPrinted)
          << " (printed legend), which does not balance; alpha = "
          << formatScalar(constants.alphaCorrected) << " balances\n";
    }
  }

  if (format == "weight") {
    if (opts.records) {
      emitRecord(out, Json{{"command", "figure"},
                           {"panel", panel},
                           {"alpha", alphaArg},
                           {"format", format},
                           {"weight", weightRecord(icosa, fanWeight)}});
    } else {
      writeWeightLines(icosa, fanWeight, opts, out);
    }
    return 0;
  }

  const DrawnWeight drawn = inverseTransferWeight(drawing, fanWeight);
  const EmitFormat emitFormat =
      format == "dot" ? EmitFormat::Dot : EmitFormat::Tikz;
  const std::string text = emitFigure(drawing, drawn, legend, emitFormat);
  if (opts.records) {
    emitRecord(out, Json{{"command", "figure"},
                         {"panel", panel},
                         {"alpha", alphaArg},
                         {"format", format},
                         {"text", text}});
  } else {
    out << text;
  }
  return 0;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  GlobalOptions opts;
  CLI::App app{"Exact Minkowski weights on fans over 3-polytopes"};
  app.require_subcommand(1);
  app.add_flag("--records", opts.records,
               "emit one JSON record per result instead of text");
  app.add_option("--approx", opts.approx,
                 "append ~decimal hints with this many digits to exact scalars")
      ->check(CLI::Range(1, 50));
  app.add_option("--radicand", opts.radicand,
                 "field radicand required of input files (default 5)");
  app.add_flag("--lenient", opts.lenient,
               "downgrade skeleton validation failures to warnings");

  auto* polytope =
      app.add_subcommand("polytope", "write a builtin solid's skeleton");
  std::string polytopeName;
  std::string polytopeOut;
  polytope->add_option("name", polytopeName, "builtin solid name")
      ->required()
      ->check(CLI::IsMember({"tetrahedron", "cube", "octahedron", "dodecahedron",
                             "icosahedron"}));
  polytope->add_option("--out", polytopeOut, "output file (default stdout)");

  auto* dim =
      app.add_subcommand("dim", "dimension of the space of balanced weights");
  std::string dimSkeleton;
  dim->add_option("--skeleton", dimSkeleton, "skeleton file")
      ->required()
      ->check(CLI::ExistingFile);

  auto* basis =
      app.add_subcommand("basis", "echelon basis of the balanced weights");
  std::string basisSkeleton;
  basis->add_option("--skeleton", basisSkeleton, "skeleton file")
      ->required()
      ->check(CLI::ExistingFile);

  auto* check = app.add_subcommand("check", "verify the balancing condition");
  std::string checkSkeleton;
  std::string checkWeight;
  check->add_option("--skeleton", checkSkeleton, "skeleton file")
      ->required()
      ->check(CLI::ExistingFile);
  check->add_option("--weight", checkWeight, "weight file")
      ->required()
      ->check(CLI::ExistingFile);

  auto* solve =
      app.add_subcommand("solve", "balanced weights under pins and zeros");
  std::string solveSkeleton;
  std::string solvePin;
  std::vector<std::string> solveZeros;
  solve->add_option("--skeleton", solveSkeleton, "skeleton file")
      ->required()
      ->check(CLI::ExistingFile);
  solve->add_option("--pin", solvePin, "partial weight file of pinned values")
      ->check(CLI::ExistingFile);
  solve->add_option("--zero", solveZeros, "edges forced to zero, as name1:name2");

  auto* scan = app.add_subcommand(
      "scan-support", "per edge: can a balanced weight vanish exactly there?");
  std::string scanSkeleton;
  scan->add_option("--skeleton", scanSkeleton, "skeleton file")
      ->required()
      ->check(CLI::ExistingFile);

  auto* figure =
      app.add_subcommand("figure", "emit a panel of the dodecahedral drawing");
  std::string figurePanel;
  std::string figureAlpha = "corrected";
  std::string figureFormat = "tikz";
  figure->add_option("--panel", figurePanel, "left or right")
      ->required()
      ->check(CLI::IsMember({"left", "right"}));
  figure->add_option("--alpha", figureAlpha, "right-panel alpha value")
      ->check(CLI::IsMember({"printed", "corrected"}));
  figure->add_option("--format", figureFormat, "tikz, dot, or weight")
      ->check(CLI::IsMember({"tikz", "dot", "weight"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& parseError) {
    const int code = app.exit(parseError, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*polytope) return runPolytope(polytopeName, polytopeOut, opts, out);
    if (*dim) return runDim(loadSkeleton(dimSkeleton, opts, err), opts, out);
    if (*basis) return runBasis(loadSkeleton(basisSkeleton, opts, err), opts, out);
    if (*check) {
      const PolytopeSkeleton skeleton = loadSkeleton(checkSkeleton, opts, err);
      return runCheck(skeleton, loadWeight(checkWeight, skeleton), opts, out);
    }
    if (*solve) {
      return runSolve(loadSkeleton(solveSkeleton, opts, err), solvePin,
                      solveZeros, opts, out);
    }
    if (*scan) {
      return runScanSupport(loadSkeleton(scanSkeleton, opts, err), opts, out);
    }
    if (*figure) {
      return runFigure(figurePanel, figureAlpha, figureFormat, opts, out, err);
    }
  } catch (const Error& error) {
    err << "error: " << error.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace balfan
