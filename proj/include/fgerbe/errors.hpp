#pragma once

#include <stdexcept>
#include <string>

namespace fgerbe {

// A table or object violates a mathematical axiom; what() names the axiom and witnesses.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: wrong shapes, bad references, unparsable files.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A combinatorial or numeric size guard was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fgerbe
