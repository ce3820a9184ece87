#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homdist {

/// Witness scan reached its budget cap. Over an infinite oracle this never
/// certifies nonexistence; rerun with a larger cap to continue.
class SearchExhausted : public std::runtime_error {
 public:
  explicit SearchExhausted(std::uint64_t cap)
      : std::runtime_error("witness search exhausted at cap " +
                           std::to_string(cap)),
        cap_(cap) {}
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

/// An automorphism-group enumeration would exceed the configured order cap.
class GroupTooLarge : public std::runtime_error {
 public:
  explicit GroupTooLarge(std::uint64_t cap)
      : std::runtime_error("group order exceeds cap " + std::to_string(cap)),
        cap_(cap) {}
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

/// A finite ("set:") branch spec ran out of lengths mid-run.
class BranchSpecExhausted : public std::runtime_error {
 public:
  explicit BranchSpecExhausted(const std::string& dsl)
      : std::runtime_error("branch spec exhausted: " + dsl) {}
};

/// Malformed input file or DSL string.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace homdist
