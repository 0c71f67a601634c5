#pragma once

#include <stdexcept>
#include <string>

namespace hochcount {

// Base for every error the library raises on purpose. The C API maps each
// subclass onto a status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A computation would exceed an enumeration or memory budget. Counts are never
// truncated silently.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class NotIntegral : public Error {
 public:
  using Error::Error;
};

}  // namespace hochcount
