#pragma once

#include <stdexcept>
#include <string>

namespace skewrank {

// Base class for every domain error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroInversion : Error {
  ZeroInversion() : Error("inverse of zero field element") {}
};

struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string& what) : Error("field mismatch: " + what) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error("dimension mismatch: " + what) {}
};

struct NotSkew : Error {
  NotSkew() : Error("matrix is not skew-symmetric") {}
};

struct OddSize : Error {
  OddSize() : Error("Pfaffian needs even size") {}
};

struct SingularTransform : Error {
  SingularTransform() : Error("transformation matrix is singular") {}
};

struct UnsupportedField : Error {
  explicit UnsupportedField(const std::string& what) : Error("unsupported field: " + what) {}
};

struct NonHomogeneousInput : Error {
  NonHomogeneousInput() : Error("generators must be homogeneous") {}
};

struct TooLarge : Error {
  explicit TooLarge(const std::string& what) : Error("instance too large: " + what) {}
};

struct DegenerateLine : Error {
  DegenerateLine() : Error("line basis columns are linearly dependent") {}
};

struct NonConstantRankOnLine : Error {
  NonConstantRankOnLine() : Error("pencil does not have constant rank along the line") {}
};

struct OddIndexGap : Error {
  OddIndexGap() : Error("minimal index gap is odd; input is not of kernel-bundle form") {}
};

struct NoSkewifier : Error {
  NoSkewifier() : Error("solution space contains no invertible element") {}
};

struct OddRankRequested : Error {
  OddRankRequested() : Error("constant rank of a skew matrix must be even") {}
};

struct DisallowedRank : Error {
  explicit DisallowedRank(long long r)
      : Error("rank " + std::to_string(r) + " is not of the form 12s or 12s-4") {}
};

struct OutOfRange : Error {
  explicit OutOfRange(const std::string& what) : Error("out of range: " + what) {}
};

struct CorpusCorrupt : Error {
  explicit CorpusCorrupt(const std::string& what) : Error("corpus data corrupt: " + what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

struct DegreeCapExceeded : Error {
  explicit DegreeCapExceeded(int cap)
      : Error("Buchberger completion exceeded degree cap " + std::to_string(cap)) {}
};

}  // namespace skewrank
