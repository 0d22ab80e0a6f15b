#pragma once

#include <stdexcept>

namespace catbreed {

// Physically meaningless input: zero vectors, vanishing traces.
class degenerate_input : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A requested threshold does not exist in the search range.
class threshold_not_found : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace catbreed
