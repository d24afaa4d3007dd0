#pragma once

#include <stdexcept>
#include <string>

namespace odct {

  // Malformed or out-of-range arguments.
  class invalid_input : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A size cap (enumeration ceiling, exhaustive-search threshold) was exceeded.
  class capacity_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // An argument lies outside the family a closed-form criterion applies to,
  // e.g. an element of OCT_n handed to an ODCT_n-only characterization.
  class scope_error : public std::domain_error {
   public:
    using std::domain_error::domain_error;
  };

}  // namespace odct
