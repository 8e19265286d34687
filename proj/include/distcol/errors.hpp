#pragma once

#include <stdexcept>
#include <string>

namespace distcol {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The requested object exceeds a configured size cap.
class TooLarge : public Error {
 public:
  using Error::Error;
};

class NoMatching : public Error {
 public:
  using Error::Error;
};

class NoComatching : public Error {
 public:
  using Error::Error;
};

/// A bound that is only claimed for C_l-free graphs was asked of a graph
/// that contains C_l.
class NotCycleFree : public Error {
 public:
  using Error::Error;
};

class NotBipartite : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace distcol
