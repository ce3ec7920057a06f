#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace abelian {

// Thrown when an exhaustive enumeration would exceed the configured bound.
// The message names the bound so the caller knows what to raise.
class BoundExceeded : public std::runtime_error {
public:
  BoundExceeded(const std::string& what, std::int64_t bound)
      : std::runtime_error(what), bound_(bound) {}

  std::int64_t bound() const noexcept { return bound_; }

private:
  std::int64_t bound_;
};

}  // namespace abelian
