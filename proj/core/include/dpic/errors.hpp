#ifndef DPIC_ERRORS_HPP
#define DPIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dpic {

// Malformed or inconsistent caller input (unknown ids, bad ranges).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well formed but outside what the algorithm handles
// (oriented cycles, non-Dynkin knitting, ...).
class UnsupportedInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A requested object lies outside a finite window.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A window or search radius is too small to give an exact answer.
class InsufficientWindow : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Internal cross-check failed. Always indicates a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dpic

#endif  // DPIC_ERRORS_HPP
