#include "cinf/rational.hpp"

#include <cctype>

namespace cinf {

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  if (text[0] == '-') i = 1;
  if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
  std::size_t slash = std::string::npos;
  for (std::size_t j = i; j < text.size(); ++j) {
    char c = text[j];
    if (c == '/') {
      if (slash != std::string::npos) return std::nullopt;
      slash = j;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  }
  if (slash == std::string::npos) return Rational(BigInt(text));
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (den.empty() || num == "-" || num.empty()) return std::nullopt;
  BigInt d(den);
  if (d == 0) return std::nullopt;
  return Rational(BigInt(num), d);
}

}  // namespace cinf
