#pragma once

#include <stdexcept>
#include <string>

namespace ty {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivideByZero : Error {
  DivideByZero() : Error("division by zero") {}
  explicit DivideByZero(const std::string& m) : Error(m) {}
};

struct PoleError : Error {
  explicit PoleError(const std::string& m = "evaluation at a pole") : Error(m) {}
};

struct NonLinearFactor : Error {
  explicit NonLinearFactor(const std::string& m) : Error(m) {}
};

struct InconsistentSamples : Error {
  explicit InconsistentSamples(const std::string& m) : Error(m) {}
};

struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& m) : Error(m) {}
};

struct InvalidIndex : Error {
  explicit InvalidIndex(const std::string& m) : Error(m) {}
};

struct InvalidWeight : Error {
  explicit InvalidWeight(const std::string& m) : Error(m) {}
};

struct SizeLimitExceeded : Error {
  explicit SizeLimitExceeded(const std::string& m) : Error(m) {}
};

struct NoHighestVector : Error {
  explicit NoHighestVector(const std::string& m) : Error(m) {}
};

struct NotInSpan : Error {
  explicit NotInSpan(const std::string& m) : Error(m) {}
};

struct EmptySkewSpace : Error {
  explicit EmptySkewSpace(const std::string& m) : Error(m) {}
};

struct NotOneDimensional : Error {
  explicit NotOneDimensional(const std::string& m) : Error(m) {}
};

struct NotEigenvector : Error {
  explicit NotEigenvector(const std::string& m) : Error(m) {}
};

struct UnpairableRoots : Error {
  explicit UnpairableRoots(const std::string& m) : Error(m) {}
};

struct InfiniteIntersection : Error {
  explicit InfiniteIntersection(const std::string& m) : Error(m) {}
};

struct SingularMatrix : Error {
  explicit SingularMatrix(const std::string& m) : Error(m) {}
};

}  // namespace ty
