#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace autoseq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of candidates before finding a witness.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::uint64_t cap, const std::string& what)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

/// An automaton construction would exceed its hard state limit.
class StateCapExceeded : public Error {
 public:
  explicit StateCapExceeded(std::size_t cap)
      : Error("automaton construction exceeded state cap " + std::to_string(cap)), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class InvalidMatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

class SpecParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace autoseq
