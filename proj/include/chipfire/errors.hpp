#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace chipfire {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GraphErrorKind {
  no_vertices,
  bad_vertex,
  loop_arc,
  arc_from_sink,
  bad_multiplicity,
  sink_unreachable,
  not_laplacian_shaped,
};

/// A graph description that cannot be turned into a valid global-sink digraph.
/// `vertex()` carries the offending vertex (internal 0-based index) when one applies.
class GraphError : public Error {
 public:
  GraphError(GraphErrorKind kind, const std::string& what,
             std::optional<std::size_t> vertex = std::nullopt)
      : Error(what), kind_(kind), vertex_(vertex) {}

  GraphErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> vertex() const noexcept { return vertex_; }

 private:
  GraphErrorKind kind_;
  std::optional<std::size_t> vertex_;
};

const char* to_string(GraphErrorKind kind) noexcept;

/// Caller-side contract violations on configurations, scripts and vectors.
class InputError : public Error {
 public:
  using Error::Error;
};

class NegativeInput : public InputError {
 public:
  using InputError::InputError;
};

class NotStable : public InputError {
 public:
  using InputError::InputError;
};

class NegativeScript : public InputError {
 public:
  using InputError::InputError;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// An exhaustive procedure refused to run because its search space exceeds a limit.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t limit)
      : Error(what), limit_(limit) {}
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
};

class EnumerationCapExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class SearchBoundExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

/// A mathematical guarantee did not hold at runtime.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class StrongPositivityPostCheckFailed : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit integer overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("64-bit integer overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit integer overflow in multiplication");
  return r;
}

}  // namespace detail
}  // namespace chipfire
