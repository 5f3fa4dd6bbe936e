#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mvrp {

// Base for every error raised by the library. Callers that only need a
// message catch this; the CLI maps it to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class UnknownCityId : public Error {
 public:
  explicit UnknownCityId(int id)
      : Error("unknown city id " + std::to_string(id)), id_(id) {}
  int id() const noexcept { return id_; }

 private:
  int id_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ClusterTooLarge : public Error {
 public:
  ClusterTooLarge(std::size_t size, std::size_t cap)
      : Error("cluster of " + std::to_string(size) +
              " cities exceeds exact-solver cap of " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}
  std::size_t size() const noexcept { return size_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

class IncompleteTour : public Error {
 public:
  using Error::Error;
};

}  // namespace mvrp
