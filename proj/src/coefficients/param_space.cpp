#include "commop/param_space.hpp"

#include <algorithm>
#include <cctype>

#include "commop/error.hpp"
#include "commop/rat.hpp"

namespace commop {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!std::isalpha(head) && s.front() != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    auto c = static_cast<unsigned char>(ch);
    return std::isalnum(c) || ch == '_';
  });
}

bool is_reserved_symbol(std::string_view s) {
  return s == "x" || s == "D" || s == "z";
}

ParamSpace::ParamSpace(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (!is_identifier(n))
      throw Error(ErrorKind::invalid_argument, "bad parameter name '" + n + "'");
    if (is_reserved_symbol(n))
      throw Error(ErrorKind::invalid_argument,
                  "parameter name '" + n + "' is reserved");
    if (std::find(names_.begin(), names_.begin() + i, n) != names_.begin() + i)
      throw Error(ErrorKind::invalid_argument, "duplicate parameter '" + n + "'");
  }
}

ParamSpace ParamSpace::parse(std::string_view decls) {
  std::vector<std::string> names;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) names.push_back(std::move(cur));
    cur.clear();
  };
  for (char ch : decls) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch)))
      flush();
    else
      cur.push_back(ch);
  }
  flush();
  return ParamSpace(std::move(names));
}

std::optional<std::size_t> ParamSpace::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t ParamSpace::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::unbound_parameter,
              "undeclared parameter '" + std::string(name) + "'");
}

ParamSpace ParamSpace::extended(const std::vector<std::string>& more) const {
  auto names = names_;
  names.insert(names.end(), more.begin(), more.end());
  return ParamSpace(std::move(names));
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  auto bad = [&] {
    return Error(ErrorKind::parse, "not an exact rational: '" + s + "'");
  };
  if (s.empty()) throw bad();
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  auto slash = s.find('/');
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::size_t num_end = slash == std::string::npos ? s.size() : slash;
  if (!digits(start, num_end)) throw bad();
  if (slash != std::string::npos && !digits(slash + 1, s.size())) throw bad();
  std::string clean = s[0] == '+' ? s.substr(1) : s;
  Rat r;
  if (r.set_str(clean, 10) != 0) throw bad();
  if (r.get_den() == 0) throw Error(ErrorKind::division_by_zero, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace commop
