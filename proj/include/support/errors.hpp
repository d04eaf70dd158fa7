#pragma once

#include <stdexcept>
#include <string>

namespace support {

// Invalid domain value or violated operation precondition.
class spec_error : public std::invalid_argument {
 public:
  explicit spec_error(const std::string& what) : std::invalid_argument(what) {}
};

// A configured cap (depth, value count, interval parts) would be exceeded.
// Raised before the offending allocation is committed.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace support
