#ifndef FPLOC_ERRORS_HPP
#define FPLOC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fploc {

// Text could not be parsed (expression grammar, rational literals, model
// documents). `position` is a 0-based character or byte offset into the
// offending input where known, std::string::npos otherwise.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& msg, std::size_t position = std::string::npos)
      : std::runtime_error(position == std::string::npos
                               ? msg
                               : msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// A structurally well-formed document violates a model invariant.  The
// message names the violated invariant ("q must be even", "zero weight", ...).
class validation_error : public std::runtime_error {
public:
  explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A sum that the localization identity forces to be polynomial failed to
// cancel.  Carries the reduced fraction for diagnostics.
class not_polynomial_error : public std::runtime_error {
public:
  explicit not_polynomial_error(const std::string& fraction_text)
      : std::runtime_error("localization sum is not a polynomial: " + fraction_text),
        fraction_text_(fraction_text) {}

  const std::string& fraction_text() const { return fraction_text_; }

private:
  std::string fraction_text_;
};

// Class degree does not match the codimension where a characteristic number
// is requested.
class degree_mismatch_error : public std::runtime_error {
public:
  explicit degree_mismatch_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fploc

#endif
