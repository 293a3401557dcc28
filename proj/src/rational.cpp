#include "factored_info/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace factored_info {

std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/" + denominator(r).str();
  }
  return s;
}

Rational rational_from_string(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty rational literal");
  }
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(text)) {
      throw std::invalid_argument("malformed rational literal: " + text);
    }
    return Rational(BigInt(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || BigInt(den) == 0) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
  return Rational(BigInt(num), BigInt(den));
}

}  // namespace factored_info
