#pragma once

#include <stdexcept>

namespace mpcs {

// chaotic trajectory left the guard region or went non-finite
class DivergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// malformed external data: PPM, cipher container, key file
class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace mpcs
