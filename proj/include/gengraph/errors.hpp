#pragma once

#include <stdexcept>
#include <string>

namespace gengraph {

// Raised for the order-1 group. Every construction here assumes a
// nontrivial cyclic group.
class TrivialGroupError : public std::invalid_argument {
 public:
  TrivialGroupError()
      : std::invalid_argument("trivial group excluded: n must be >= 2") {}
};

class DisconnectedGraphError : public std::invalid_argument {
 public:
  explicit DisconnectedGraphError(const std::string& what)
      : std::invalid_argument(what + ": graph is disconnected") {}
};

class InstanceTooLargeError : public std::length_error {
 public:
  explicit InstanceTooLargeError(const std::string& what)
      : std::length_error(what) {}
};

}  // namespace gengraph
