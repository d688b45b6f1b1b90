#pragma once

#include <stdexcept>
#include <string>

namespace simplexhull {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller passed arguments outside an operation's domain (dimension mismatch, bad range, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class DegenerateSimplex : public Error {
 public:
  using Error::Error;
};

/// The point set spans an affine subspace of dimension `rank` < n.
class DegenerateHull : public Error {
 public:
  DegenerateHull(int rank, int dimension)
      : Error("point set is degenerate: affine rank " + std::to_string(rank) + " < " +
              std::to_string(dimension)),
        rank_(rank) {}

  int rank() const noexcept { return rank_; }

 private:
  int rank_;
};

/// Some vertex lies strictly below the reflecting hyperplane.
class InadmissibleDirection : public Error {
 public:
  using Error::Error;
};

class NoContact : public Error {
 public:
  using Error::Error;
};

/// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace simplexhull
