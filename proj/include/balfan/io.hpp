#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "balfan/balance.hpp"
#include "balfan/skeleton.hpp"

namespace balfan {

/// Reads the line-oriented skeleton format:
///   # comment
///   field sqrt5
///   v <name> <Sx> <Sy> <Sz>
///   autoedges <S>          (alternative to explicit e lines)
///   e <name1> <name2>
/// When `requiredRadicand` is set the header must match it.  With
/// `strict` (the default) any validate() diagnostic is an error.
PolytopeSkeleton readSkeleton(std::istream& input,
                              std::optional<std::int64_t> requiredRadicand = std::nullopt,
                              bool strict = true);

/// Canonical text form: sorted vertices, explicit sorted edges.
/// read(write(s)) == s.
void writeSkeleton(const PolytopeSkeleton& skeleton, std::ostream& output);

/// Partial weight-file content: entries in file order plus the optional
/// `default 0` marker.
struct PartialWeight {
  std::vector<std::pair<EdgeId, QuadraticScalar>> entries;
  bool defaultZero = false;
};

/// Reads weight-file lines (`default 0`, `w <n1> <n2> <S>`) against a
/// skeleton; every referenced edge must exist and appear at most once.
PartialWeight readPartialWeight(std::istream& input,
                                const PolytopeSkeleton& skeleton);

/// Total weight: a partial file is an error unless it declares `default 0`;
/// the error names a missing edge.
WeightVector readWeight(std::istream& input, const PolytopeSkeleton& skeleton);

/// One `w` line per edge in canonical order.
void writeWeight(const PolytopeSkeleton& skeleton, const WeightVector& weight,
                 std::ostream& output);

}  // namespace balfan
