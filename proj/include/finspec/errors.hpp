#ifndef FINSPEC_ERRORS_HPP
#define FINSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace finspec {

// A requested object exceeds a hard size cap. Operations fail loudly
// instead of degrading; the message names the cap and the offending size.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what_arg, std::uint64_t requested,
                std::uint64_t cap)
      : std::runtime_error(what_arg + ": requested " +
                           std::to_string(requested) + " exceeds cap " +
                           std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::uint64_t requested() const { return requested_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t requested_;
  std::uint64_t cap_;
};

// Malformed input: broken ring tables, non-multiplicative sets, maps out of
// range, and the like.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what_arg)
      : std::runtime_error(what_arg) {}
};

// Input files that do not parse; carries file/field context.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what_arg)
      : std::runtime_error(what_arg) {}
};

// Two independent computations of the same value disagreed. This is never a
// property failure of the inputs; it means the library itself is wrong.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what_arg)
      : std::logic_error(what_arg) {}
};

}  // namespace finspec

#endif  // FINSPEC_ERRORS_HPP
