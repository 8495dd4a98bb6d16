#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "fintop/point_set.hpp"

namespace fintop {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: sets outside the carrier, bad partitions, arity
/// mismatches, unknown tokens, bad axiom indices.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A requested size exceeds a representational or practical bound.
class SizeLimit : public Error {
 public:
  using Error::Error;
};

/// A family of sets offered as a topology is not one.
class NotATopology : public Error {
 public:
  enum class Reason { missing_empty, missing_full, union_escape, intersection_escape };

  NotATopology(Reason reason, PointSet a, PointSet b, std::string what)
      : Error(std::move(what)), reason_(reason), first_(a), second_(b) {}

  Reason reason() const { return reason_; }
  /// For the escape reasons: two members whose union/intersection is missing.
  PointSet first() const { return first_; }
  PointSet second() const { return second_; }

 private:
  Reason reason_;
  PointSet first_;
  PointSet second_;
};

/// A space required to be pre-Hausdorff is not; carries a pair of points
/// that is T0-separated without being T2-separated.
class NotPreHausdorff : public Error {
 public:
  NotPreHausdorff(std::size_t x, std::size_t y)
      : Error("space is not pre-Hausdorff: points " + std::to_string(x) + " and " +
              std::to_string(y) + " are T0- but not T2-separated"),
        pair_(x, y) {}

  std::pair<std::size_t, std::size_t> pair() const { return pair_; }

 private:
  std::pair<std::size_t, std::size_t> pair_;
};

class NotContinuous : public Error {
 public:
  using Error::Error;
};

class CodomainNotTi : public Error {
 public:
  using Error::Error;
};

}  // namespace fintop
