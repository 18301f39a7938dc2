#pragma once

#include <stdexcept>
#include <string>

namespace heaps {

/// Raised for malformed user input: unknown pieces, bad graph files,
/// mismatched graphs, invalid chains, non-prime moduli.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace heaps
