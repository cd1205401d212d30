#pragma once

#include <stdexcept>
#include <string>

namespace hrw {

// Malformed arguments: wrong shapes, out-of-range indices, unknown names.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Syntax or content errors in text inputs; carries the 1-based line number.
struct ParseError : std::runtime_error {
  ParseError(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
  int line;
};

// Enumeration or sweep would exceed the configured work budget.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A construction's mathematical precondition fails on concrete data.
// Distinct from InputError: these are domain outcomes (CLI exit 1, not 2).
struct ConstructionError : std::runtime_error {
  ConstructionError(int at_element, const std::string& what)
      : std::runtime_error(what), element(at_element) {}
  int element;
};

}  // namespace hrw
