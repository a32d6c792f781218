#pragma once

#include <stdexcept>
#include <string>

namespace wsys {

// Malformed user input (bad permutation text, non-bijection, bad diagram word).
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A documented precondition was violated by the caller.
class contract_error : public std::logic_error {
 public:
  explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

// A hard size guard was exceeded (the computation would not finish).
class guard_error : public std::runtime_error {
 public:
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wsys
