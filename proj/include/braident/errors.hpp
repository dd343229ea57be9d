#ifndef BRAIDENT_ERRORS_HPP
#define BRAIDENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace braident {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Braid word text could not be parsed (empty token, zero, non-integer).
struct MalformedWord : Error {
  using Error::Error;
};

// Generator index incompatible with the declared strand count.
struct IndexOutOfRange : Error {
  using Error::Error;
};

// Lamination requested on fewer than two punctures.
struct InvalidPunctureCount : Error {
  using Error::Error;
};

struct InvalidScale : Error {
  using Error::Error;
};

// A float-engine intermediate became non-finite (renormalization
// threshold set too close to the double range).
struct FloatOverflow : Error {
  using Error::Error;
};

struct EmptyLamination : Error {
  using Error::Error;
};

// Exact-engine integer exceeded the configured digit cap.
struct ResourceLimit : Error {
  using Error::Error;
};

struct InsufficientData : Error {
  using Error::Error;
};

// An estimator that must converge (reference entropy) hit its
// iteration budget first.
struct NoConvergence : Error {
  using Error::Error;
};

}  // namespace braident

#endif
