#pragma once

#include <stdexcept>
#include <string>

namespace dosage {

/// Malformed input or violated precondition (bad ids, bounds, files).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exhaustive enumeration refused because the graph exceeds the configured cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t vertex_count, std::size_t cap)
      : std::runtime_error("graph has " + std::to_string(vertex_count) +
                           " vertices, above the enumeration cap of " +
                           std::to_string(cap) +
                           "; raise --cap or pass --force to enumerate anyway"),
        vertex_count_(vertex_count),
        cap_(cap) {}

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t vertex_count_;
  std::size_t cap_;
};

/// An internal invariant did not hold. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dosage
