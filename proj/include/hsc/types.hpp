#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hsc {

// Node and hyperedge identifiers. 0-based in memory; serialized files use
// 1-based ids. State nodes of a system with n states are 0..n-1, control
// nodes are n..n+m-1.
using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

// Malformed input or violated precondition. CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested computation exceeds a documented size cap. CLI exit code 3.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hsc
