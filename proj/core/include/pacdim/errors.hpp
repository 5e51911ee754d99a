#pragma once

#include <stdexcept>

namespace pacdim {

/// Invariant or precondition violation (bad weights, domain mismatch, ...).
/// The CLI maps this to exit code 3.
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An enumeration guard was exceeded and no subsample seed was supplied.
/// The CLI maps this to exit code 4.
struct guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pacdim
