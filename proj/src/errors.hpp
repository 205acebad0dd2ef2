#ifndef CKA_ERRORS_HPP
#define CKA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cka {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/** Malformed textual input; carries the offending position (0-based). */
class ParseError : public Error {
public:
  ParseError(const std::string &msg, std::size_t position)
      : Error(msg + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/** A documented precondition was broken by the caller. */
class UsageError : public Error {
public:
  using Error::Error;
};

/** An internal invariant failed. Signals a bug; never swallowed. */
class InternalError : public Error {
public:
  using Error::Error;
};

#define CKA_CHECK(cond, msg)                                                   \
  do {                                                                         \
    if (!(cond))                                                               \
      throw ::cka::InternalError(msg);                                         \
  } while (0)

} // namespace cka

#endif
