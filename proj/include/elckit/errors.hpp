#ifndef ELCKIT_ERRORS_HPP
#define ELCKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace elckit {

/// A configured size or order cap was exceeded (orbit caps, enumeration
/// caps, matrix capacity). Distinct from validation errors so callers can
/// map it to its own exit code.
class capacity_error : public std::runtime_error {
  public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace elckit

#endif
