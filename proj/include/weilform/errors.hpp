#ifndef WEILFORM_ERRORS_HPP
#define WEILFORM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace weilform {

// Bad user-supplied data: wrong shapes, violated preconditions, malformed JSON.
class InputError : public std::runtime_error {
  public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A root whose weight is not an integral power of q.
class NonIntegralWeightError : public InputError {
  public:
    explicit NonIntegralWeightError(const std::string& what) : InputError(what) {}
};

// An operation that requires a pure module received a mixed one.
class PurityError : public InputError {
  public:
    explicit PurityError(const std::string& what) : InputError(what) {}
};

// Two independent computation routes disagreed, or a certified invariant
// failed to hold.  This always signals a bug, never bad input.
class InternalInvariantError : public std::logic_error {
  public:
    explicit InternalInvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace weilform

#endif
