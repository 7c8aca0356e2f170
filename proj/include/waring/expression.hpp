#ifndef WARING_EXPRESSION_HPP
#define WARING_EXPRESSION_HPP

#include <waring/binary_form.hpp>
#include <waring/number_field.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace waring {

/// Syntax or semantic error in a form or field expression; position is a
/// zero-based offset into the source text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Terms of different total degree; offsets lists where each offending term starts.
class InhomogeneousError : public std::invalid_argument {
 public:
  InhomogeneousError(const std::string& what, std::vector<std::size_t> offsets)
      : std::invalid_argument(what), offsets_(std::move(offsets)) {}
  const std::vector<std::size_t>& offsets() const { return offsets_; }

 private:
  std::vector<std::size_t> offsets_;
};

/// Signed sum of terms c*x^a*y^b over Q; '*' and '^1' optional, c may be a fraction.
BinaryForm parse_form_expr(const std::string& text);

/// Q, Q(i), Q(zeta<n>), Q(sqrt<d>), R, C.
NumberField parse_field_spec(const std::string& text);

}  // namespace waring

#endif
