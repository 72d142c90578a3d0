#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace ramanujan {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter violates the documented precondition of an operation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A self-consistency check failed. Seeing one of these means a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Two distinct generators landed on the same neighbour, so the Cayley
/// graph would be a multigraph.
class CollisionError : public Error {
 public:
  CollisionError(std::string what, std::size_t vertex, std::size_t gen_a,
                 std::size_t gen_b)
      : Error(std::move(what)), vertex_(vertex), gen_a_(gen_a), gen_b_(gen_b) {}
  std::size_t vertex() const { return vertex_; }
  std::size_t first_generator() const { return gen_a_; }
  std::size_t second_generator() const { return gen_b_; }

 private:
  std::size_t vertex_, gen_a_, gen_b_;
};

/// A pairing or construction would place a one on the diagonal.
class SelfLoopError : public Error {
 public:
  SelfLoopError(std::string what, std::size_t vertex)
      : Error(std::move(what)), vertex_(vertex) {}
  std::size_t vertex() const { return vertex_; }

 private:
  std::size_t vertex_;
};

/// An adjacency matrix that should be symmetric is not.
class AsymmetryError : public Error {
 public:
  AsymmetryError(std::string what, std::size_t row, std::size_t col)
      : Error(std::move(what)), row_(row), col_(col) {}
  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t row_, col_;
};

/// A (bi)regularity requirement does not hold.
class IrregularError : public Error {
 public:
  IrregularError(std::string what, std::string side, std::size_t index)
      : Error(std::move(what)), side_(std::move(side)), index_(index) {}
  const std::string& side() const { return side_; }
  std::size_t index() const { return index_; }

 private:
  std::string side_;
  std::size_t index_;
};

/// Malformed input file. `line` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::string what, std::size_t line)
      : Error(std::move(what)), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ramanujan
