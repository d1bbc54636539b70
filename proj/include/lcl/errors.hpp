#pragma once

#include <stdexcept>

namespace lcl {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct invalid_site : std::logic_error {
  using std::logic_error::logic_error;
};

struct precondition_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace lcl
