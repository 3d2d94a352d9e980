#pragma once

#include <stdexcept>
#include <string>

namespace cl30 {

/// Element has no multiplicative inverse (zero complex norm under a * conj(a)).
class NonInvertible : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A vector with a nonzero e3 component was handed to the planar matrix layer.
class NonPlanarVector : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class UnknownLabel : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Text or JSON input that does not match the documented grammar or schema.
class MalformedInput : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A chain mixing left-acting bras with right-acting kets; its evaluation
/// order is undefined, so such chains are never evaluated.
class MixedBraKetChain : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace cl30
