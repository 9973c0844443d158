#pragma once

#include <stdexcept>
#include <string>

namespace upcover {

/// Instance data, file contents, or arguments violate the data model.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A solver was invoked on an instance outside its preconditions.
class ApplicabilityError : public std::runtime_error {
public:
  explicit ApplicabilityError(const std::string& what) : std::runtime_error(what) {}
};

class NotAStar : public ApplicabilityError {
public:
  explicit NotAStar(const std::string& what = "instance is not a star network")
      : ApplicabilityError(what) {}
};

class NotAPath : public ApplicabilityError {
public:
  explicit NotAPath(const std::string& what = "instance is not a path network")
      : ApplicabilityError(what) {}
};

class NotATree : public ApplicabilityError {
public:
  explicit NotATree(const std::string& what = "instance is not a tree network")
      : ApplicabilityError(what) {}
};

class NonUniformWeights : public ApplicabilityError {
public:
  explicit NonUniformWeights(const std::string& what = "instance has non-uniform node weights")
      : ApplicabilityError(what) {}
};

class NonIntegerInstance : public ApplicabilityError {
public:
  explicit NonIntegerInstance(const std::string& what = "instance does not have integer parameters")
      : ApplicabilityError(what) {}
};

class WorkBoundExceeded : public ApplicabilityError {
public:
  explicit WorkBoundExceeded(const std::string& what = "enumeration work bound exceeded")
      : ApplicabilityError(what) {}
};

class SolutionBelowThreshold : public ApplicabilityError {
public:
  explicit SolutionBelowThreshold(const std::string& what = "solution value below gadget threshold")
      : ApplicabilityError(what) {}
};

}  // namespace upcover
