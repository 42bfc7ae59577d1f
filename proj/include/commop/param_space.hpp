#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace commop {

// The ordered list of named symbols a computation works over. Parameter i is
// the i-th coordinate of every exponent vector. Declared once per session;
// chains extend a copy with their integration constants.
class ParamSpace {
 public:
  ParamSpace() = default;
  explicit ParamSpace(std::vector<std::string> names);

  // Comma- or whitespace-separated declaration list, e.g. "A6, A2".
  static ParamSpace parse(std::string_view decls);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<std::size_t> find(std::string_view name) const;
  // Throws Error(unbound_parameter) for undeclared names.
  std::size_t index(std::string_view name) const;

  ParamSpace extended(const std::vector<std::string>& more) const;

  bool operator==(const ParamSpace&) const = default;

 private:
  std::vector<std::string> names_;
};

bool is_identifier(std::string_view s);
// x, D and z name the polynomial, operator and spectral variables.
bool is_reserved_symbol(std::string_view s);

}  // namespace commop
