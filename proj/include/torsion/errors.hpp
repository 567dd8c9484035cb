#ifndef TORSION_ERRORS_HPP
#define TORSION_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace torsion {

// Caller supplied something outside an operation's domain. CLI exit code 1.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal cross-check failed (two evaluators disagree, a constructed
// word is not reduced, an exact division left a remainder). CLI exit code 2.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A configured resource guard was exceeded. CLI exit code 3.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw IntegrityError(what);
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

}  // namespace detail

}  // namespace torsion

#endif  // TORSION_ERRORS_HPP
