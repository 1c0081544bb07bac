#pragma once

#include <stdexcept>
#include <string>

namespace approxrat {

/// Denominator (or divisor) equal to zero.
class zero_denominator_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed fraction, decimal literal or policy text.
class parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A continued-fraction routine received a negative rational.
class negative_input_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Convergent index outside the range an operation is defined on.
class index_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A slash policy cannot represent even the integer part of a value.
class unrepresentable_error : public std::range_error {
 public:
  using std::range_error::range_error;
};

}  // namespace approxrat
