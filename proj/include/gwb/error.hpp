#pragma once

#include <stdexcept>
#include <string>

namespace gwb {

/// Base class for everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (bad JSON, unknown identifier,
/// non-homogeneous relation, ...). The CLI maps this to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that lies outside what the algorithms support
/// (reducible minimal polynomial, unsupported group class, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace gwb
