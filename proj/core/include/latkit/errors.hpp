#pragma once

#include <stdexcept>
#include <string>

namespace latkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad index, invalid relation, bad table).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class NotALattice : public PreconditionFailed {
 public:
  NotALattice() : PreconditionFailed("order is not a lattice") {}
};

class NotCancellative : public PreconditionFailed {
 public:
  NotCancellative() : PreconditionFailed("monoid is not cancellative") {}
};

class NotEmbedding : public PreconditionFailed {
 public:
  NotEmbedding() : PreconditionFailed("map is not an order embedding") {}
};

class NotConvexRange : public PreconditionFailed {
 public:
  NotConvexRange() : PreconditionFailed("map does not have convex range") {}
};

class NotZeroDimensional : public PreconditionFailed {
 public:
  NotZeroDimensional() : PreconditionFailed("topology is not zero-dimensional") {}
};

/// A characterization produced a map that disagrees with the input.  Raised
/// only if a verified theorem is violated.
class DecompositionMismatch : public Error {
 public:
  using Error::Error;
};

/// Search exceeded its node cap.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::size_t nodes)
      : Error("search budget exceeded after " + std::to_string(nodes) + " nodes"), nodes_(nodes) {}
  std::size_t nodes() const { return nodes_; }

 private:
  std::size_t nodes_;
};

/// A named hypothesis of an extension theorem does not hold on the instance.
class HypothesisFailed : public Error {
 public:
  explicit HypothesisFailed(std::string hypothesis)
      : Error("hypothesis failed: " + hypothesis), hypothesis_(std::move(hypothesis)) {}
  const std::string& hypothesis() const { return hypothesis_; }

 private:
  std::string hypothesis_;
};

}  // namespace latkit
