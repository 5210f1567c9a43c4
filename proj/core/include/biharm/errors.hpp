#ifndef BIHARM_ERRORS_HPP
#define BIHARM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace biharm {

// Precondition violations: zero denominators, mismatched variable tables,
// unknown variables, malformed CLI arguments.  The CLI maps these to exit
// code 2.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Text that does not conform to the polynomial / rational grammar.
// Carries the byte offset of the first offending character.
class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : UsageError(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace biharm

#endif
