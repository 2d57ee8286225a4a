#pragma once

#include <stdexcept>
#include <string>

#include "depthcore/geometry.hpp"

namespace dd {

enum class Errc {
  DuplicatePoint,
  CollinearTriple,
  SharedXCoordinate,
  DuplicateDirection,
  MissingDirection,
  EmptyTree,
  UnknownPoint,
  OutOfRange,
  DegeneratePair,
  StillDegenerate,
  SearchExhausted,
  OrderViolation,
  EmptyContour,
  ParseError,
  IoError,
};

const char* errc_name(Errc e);

// Typed error for every geometry / structure failure. `a` and `b` carry the
// offending point ids when the error names a pair or triple.
class DepthError : public std::runtime_error {
 public:
  DepthError(Errc code, std::string msg, PointId a = kNoPoint, PointId b = kNoPoint)
      : std::runtime_error(std::move(msg)), code_(code), a_(a), b_(b) {}
  Errc code() const { return code_; }
  PointId point_a() const { return a_; }
  PointId point_b() const { return b_; }

 private:
  Errc code_;
  PointId a_, b_;
};

}  // namespace dd
