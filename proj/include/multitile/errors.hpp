#pragma once

#include <stdexcept>
#include <string>

namespace multitile {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct SingularBasis : Error {
  explicit SingularBasis(const std::string& what = "basis matrix is singular") : Error(what) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what = "dimension mismatch") : Error(what) {}
};

struct BoxTooLarge : Error {
  explicit BoxTooLarge(const std::string& what = "enumeration exceeds configured cap") : Error(what) {}
};

struct WindowTooSmall : Error {
  explicit WindowTooSmall(const std::string& what = "oracle window does not cover a fundamental domain neighborhood")
      : Error(what) {}
};

struct InvalidPolygon : Error {
  explicit InvalidPolygon(const std::string& what = "invalid polygon") : Error(what) {}
};

struct NotConvex : Error {
  explicit NotConvex(const std::string& what = "polygon is not convex") : Error(what) {}
};

struct NotCentrallySymmetric : Error {
  explicit NotCentrallySymmetric(const std::string& what = "polygon is not centrally symmetric about the origin")
      : Error(what) {}
};

struct HypothesisViolated : Error {
  explicit HypothesisViolated(const std::string& what = "disjointness hypothesis violated") : Error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what = "malformed input") : Error(what) {}
};

}  // namespace multitile
