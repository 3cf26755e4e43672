#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropseg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed Newick input. `offset()` is the byte position of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// A tree violates a structural invariant (single-child internal node, negative length, ...).
class InvalidTreeError : public Error {
 public:
  using Error::Error;
};

/// Root-to-leaf distances disagree. `leaf()` names the leaf farthest from the majority depth.
class NotEquidistantError : public Error {
 public:
  NotEquidistantError(const std::string& what, std::string leaf) : Error(what), leaf_(std::move(leaf)) {}
  const std::string& leaf() const { return leaf_; }

 private:
  std::string leaf_;
};

/// A distance vector fails the three-point condition on `triple()` (0-based leaf indices).
class NotUltrametricError : public Error {
 public:
  NotUltrametricError(const std::string& what, std::array<std::size_t, 3> triple)
      : Error(what), triple_(triple) {}
  const std::array<std::size_t, 3>& triple() const { return triple_; }

 private:
  std::array<std::size_t, 3> triple_;
};

class LeafSetMismatchError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain (polytomy passed to NNI,
/// unequal heights where equal ones are required, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace tropseg
