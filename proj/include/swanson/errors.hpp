#pragma once

#include <stdexcept>
#include <string>

namespace swanson {

// Base of every error raised by the library. The CLI maps these onto exit
// code 2 (invalid input) unless stated otherwise.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
  using Error::Error;
};

// A(x) vanishes where the operation divides by it or integrates 1/A, B/A.
class SingularityError : public Error {
public:
  using Error::Error;
};

class PoleError : public Error {
public:
  PoleError(const std::string& what, double location)
      : Error(what), location_(location) {}
  double location() const noexcept { return location_; }

private:
  double location_;
};

// A reality condition of the model fails; the message names the inequality.
class ComplexSpectrumError : public Error {
public:
  using Error::Error;
};

class NoBoundStateError : public Error {
public:
  using Error::Error;
};

class SingularLevelError : public Error {
public:
  using Error::Error;
};

class DegenerateParameterError : public Error {
public:
  DegenerateParameterError(const std::string& what, int k)
      : Error(what), k_(k) {}
  int degree() const noexcept { return k_; }

private:
  int k_;
};

class NotShapeInvariantError : public Error {
public:
  NotShapeInvariantError(const std::string& what, double max_deviation)
      : Error(what), max_deviation_(max_deviation) {}
  double max_deviation() const noexcept { return max_deviation_; }

private:
  double max_deviation_;
};

class RangeError : public Error {
public:
  using Error::Error;
};

class AssemblyError : public Error {
public:
  AssemblyError(const std::string& what, std::size_t node)
      : Error(what), node_(node) {}
  std::size_t node() const noexcept { return node_; }

private:
  std::size_t node_;
};

class IndefiniteWeightError : public Error {
public:
  using Error::Error;
};

class NoLevelError : public Error {
public:
  using Error::Error;
};

class ComplexExponentError : public Error {
public:
  using Error::Error;
};

} // namespace swanson
