#include "balfan/io.hpp"

#include <cctype>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace balfan {

namespace {

[[noreturn]] void failLine(std::size_t line, const std::string& message) {
  throw ParseError("line " + std::to_string(line) + ": " + message, line);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream stream(line);
  std::vector<std::string> tokens;
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

bool isComment(const std::string& line) {
  for (const char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '#';
  }
  return true;  // blank
}

bool validName(const std::string& name) {
  if (name.empty()) return false;
  for (const char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.' &&
        c != '-') {
      return false;
    }
  }
  return true;
}

QuadraticScalar parseScalarAt(std::size_t line, const std::string& token,
                              std::int64_t radicand) {
  try {
    return parseScalar(token, radicand, radicand);
  } catch (const ParseError& error) {
    failLine(line, "bad scalar '" + token + "': " + error.what());
  }
}

}  // namespace

PolytopeSkeleton readSkeleton(std::istream& input,
                              std::optional<std::int64_t> requiredRadicand,
                              bool strict) {
  std::string line;
  std::size_t lineNumber = 0;
  std::optional<std::int64_t> radicand;
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
  std::optional<QuadraticScalar> autoedges;
  std::optional<std::size_t> autoedgesLine;
  std::map<std::string, std::size_t> seenNames;

  while (std::getline(input, line)) {
    ++lineNumber;
    if (isComment(line)) continue;
    const std::vector<std::string> tokens = tokenize(line);

    if (!radicand) {
      if (tokens.size() != 2 || tokens[0] != "field" ||
          tokens[1].rfind("sqrt", 0) != 0) {
        failLine(lineNumber, "expected header 'field sqrt<radicand>'");
      }
      const std::string digits = tokens[1].substr(4);
      try {
        radicand = std::stoll(digits);
      } catch (const std::exception&) {
        failLine(lineNumber, "bad radicand '" + digits + "'");
      }
      if (requiredRadicand && radicand != *requiredRadicand) {
        failLine(lineNumber, "file declares field sqrt" + digits +
                                 " but sqrt" + std::to_string(*requiredRadicand) +
                                 " was required");
      }
      continue;
    }

    if (tokens[0] == "v") {
      if (tokens.size() != 5) failLine(lineNumber, "expected 'v <name> <x> <y> <z>'");
      if (!validName(tokens[1])) failLine(lineNumber, "bad vertex name '" + tokens[1] + "'");
      if (seenNames.count(tokens[1])) {
        failLine(lineNumber, "duplicate vertex name '" + tokens[1] +
                                 "' (first on line " +
                                 std::to_string(seenNames[tokens[1]]) + ")");
      }
      seenNames[tokens[1]] = lineNumber;
      Vec3q position;
      for (int c = 0; c < 3; ++c) {
        position[c] = parseScalarAt(lineNumber, tokens[static_cast<std::size_t>(c) + 2],
                                    *radicand);
      }
      vertices.push_back({tokens[1], std::move(position)});
    } else if (tokens[0] == "e") {
      if (tokens.size() != 3) failLine(lineNumber, "expected 'e <name1> <name2>'");
      if (autoedges) failLine(lineNumber, "explicit edges cannot follow 'autoedges'");
      for (int c = 1; c <= 2; ++c) {
        if (!seenNames.count(tokens[static_cast<std::size_t>(c)])) {
          failLine(lineNumber, "edge references unknown vertex '" +
                                   tokens[static_cast<std::size_t>(c)] + "'");
        }
      }
      if (tokens[1] == tokens[2]) failLine(lineNumber, "edge endpoints must be distinct");
      edges.emplace_back(tokens[1], tokens[2]);
    } else if (tokens[0] == "autoedges") {
      if (tokens.size() != 2) failLine(lineNumber, "expected 'autoedges <d2>'");
      if (!edges.empty()) failLine(lineNumber, "'autoedges' cannot follow explicit edges");
      if (autoedges) failLine(lineNumber, "duplicate 'autoedges' line");
      autoedges = parseScalarAt(lineNumber, tokens[1], *radicand);
      autoedgesLine = lineNumber;
    } else {
      failLine(lineNumber, "unknown directive '" + tokens[0] + "'");
    }
  }

  if (!radicand) failLine(lineNumber + 1, "missing 'field sqrt<radicand>' header");

  PolytopeSkeleton skeleton(std::move(vertices), std::move(edges), {}, *radicand);
  if (autoedges) {
    if (autoedges->sign() <= 0) {
      failLine(*autoedgesLine, "autoedges distance must be positive");
    }
    std::vector<Vertex> copy(skeleton.vertices());
    skeleton = PolytopeSkeleton(std::move(copy),
                                edgesFromSquaredDistance(skeleton, *autoedges), {},
                                *radicand);
  }

  if (strict) {
    const auto diagnostics = validate(skeleton);
    if (!diagnostics.empty()) {
      std::string message = "skeleton fails validation:";
      for (const Diagnostic& d : diagnostics) message += " " + d.message + ";";
      throw ValidationError(message);
    }
  }
  return skeleton;
}

void writeSkeleton(const PolytopeSkeleton& skeleton, std::ostream& output) {
  output << "field sqrt" << skeleton.radicand() << "\n";
  for (const Vertex& vertex : skeleton.vertices()) {
    output << "v " << vertex.name << " " << formatScalar(vertex.position[0]) << " "
           << formatScalar(vertex.position[1]) << " "
           << formatScalar(vertex.position[2]) << "\n";
  }
  for (const EdgeId& edge : skeleton.edges()) {
    output << "e " << edge.first << " " << edge.second << "\n";
  }
}

PartialWeight readPartialWeight(std::istream& input,
                                const PolytopeSkeleton& skeleton) {
  PartialWeight result;
  std::string line;
  std::size_t lineNumber = 0;
  std::map<EdgeId, std::size_t> seen;

  while (std::getline(input, line)) {
    ++lineNumber;
    if (isComment(line)) continue;
    const std::vector<std::string> tokens = tokenize(line);

    if (tokens[0] == "default") {
      if (tokens.size() != 2 || tokens[1] != "0") {
        failLine(lineNumber, "only 'default 0' is supported");
      }
      result.defaultZero = true;
    } else if (tokens[0] == "w") {
      if (tokens.size() != 4) failLine(lineNumber, "expected 'w <name1> <name2> <scalar>'");
      if (tokens[1] == tokens[2]) failLine(lineNumber, "edge endpoints must be distinct");
      const EdgeId edge(tokens[1], tokens[2]);
      if (!skeleton.hasEdge(edge)) {
        failLine(lineNumber, "unknown edge " + edge.text());
      }
      if (seen.count(edge)) {
        failLine(lineNumber, "duplicate entry for edge " + edge.text() +
                                 " (first on line " + std::to_string(seen[edge]) + ")");
      }
      seen[edge] = lineNumber;
      result.entries.emplace_back(
          edge, parseScalarAt(lineNumber, tokens[3], skeleton.radicand()));
    } else {
      failLine(lineNumber, "unknown directive '" + tokens[0] + "'");
    }
  }
  return result;
}

WeightVector readWeight(std::istream& input, const PolytopeSkeleton& skeleton) {
  const PartialWeight partial = readPartialWeight(input, skeleton);
  WeightVector weight = WeightVector::Zero(skeleton.edgeCount());
  std::vector<bool> present(static_cast<std::size_t>(skeleton.edgeCount()), false);
  for (const auto& [edge, value] : partial.entries) {
    const auto index = skeleton.edgeIndex(edge);
    weight[*index] = value;
    present[static_cast<std::size_t>(*index)] = true;
  }
  if (!partial.defaultZero) {
    for (Eigen::Index e = 0; e < skeleton.edgeCount(); ++e) {
      if (!present[static_cast<std::size_t>(e)]) {
        throw ParseError("weight file is missing edge " +
                             skeleton.edges()[static_cast<std::size_t>(e)].text() +
                             " and declares no default",
                         0);
      }
    }
  }
  return weight;
}

void writeWeight(const PolytopeSkeleton& skeleton, const WeightVector& weight,
                 std::ostream& output) {
  if (weight.size() != skeleton.edgeCount()) {
    throw ValidationError("weight vector does not match the skeleton's edges");
  }
  for (Eigen::Index e = 0; e < skeleton.edgeCount(); ++e) {
    const EdgeId& edge = skeleton.edges()[static_cast<std::size_t>(e)];
    output << "w " << edge.first << " " << edge.second << " "
           << formatScalar(weight[e]) << "\n";
  }
}

}  // namespace balfan
