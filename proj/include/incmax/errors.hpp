#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace incmax {

/// Malformed input: bad indices, invalid parameters, unparsable files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size cap or enumeration budget would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t required, std::uint64_t limit)
      : std::runtime_error(what + " (required " + std::to_string(required) + ", limit " +
                           std::to_string(limit) + ")"),
        required_(required),
        limit_(limit) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t required_;
  std::uint64_t limit_;
};

/// No element of `set` can be peeled without losing more than an average share.
class AccountabilityViolation : public std::runtime_error {
 public:
  explicit AccountabilityViolation(std::vector<std::size_t> set)
      : std::runtime_error("objective is not accountable on the given set"), set_(std::move(set)) {}

  const std::vector<std::size_t>& set() const { return set_; }

 private:
  std::vector<std::size_t> set_;
};

}  // namespace incmax
