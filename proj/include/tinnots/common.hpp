#pragma once
#include <cmath>
#include <stdexcept>

namespace tinnots {

// Thrown when a structural precondition (regime membership, admissibility,
// non-overlap) fails for otherwise well-formed inputs. The CLI maps this to
// its own exit code, distinct from plain argument errors.
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The only dB <-> linear conversion in the code base.
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

}  // namespace tinnots
