#include "lrkm/real.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace lrkm {

namespace {

bool looks_numeric(std::string_view text) {
  // digits [. digits] [e [+-] digits], optional leading sign
  std::size_t i = 0;
  const auto n = text.size();
  if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t mantissa = 0;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++mantissa;
  if (i < n && text[i] == '.') {
    ++i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++mantissa;
  }
  if (mantissa == 0) return false;
  if (i < n && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t exponent = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++exponent;
    if (exponent == 0) return false;
  }
  return i == n;
}

}  // namespace

real parse_real(std::string_view text) {
  if (!looks_numeric(text)) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  const std::string s(text);
#if defined(LRKM_PRECISION_QUAD)
  return real(s);
#elif defined(LRKM_PRECISION_EXTENDED)
  return std::strtold(s.c_str(), nullptr);
#else
  return std::strtod(s.c_str(), nullptr);
#endif
}

std::string format_fixed(const real& v, int decimals) {
  std::ostringstream os;
  os.setf(std::ios::fixed, std::ios::floatfield);
  os.precision(decimals);
  os << v;
  std::string out = os.str();
  // Rounding noise such as -1e-34 should not print as "-0.000".
  if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

std::string format_sci(const real& v, int digits) {
  std::ostringstream os;
  os.setf(std::ios::scientific, std::ios::floatfield);
  os.precision(digits);
  os << v;
  std::string out = os.str();
  // float128 streams ignore std::ios::uppercase.
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

real pi() {
  static const real value = 4 * atan(real(1));
  return value;
}

real euler_e() {
  static const real value = exp(real(1));
  return value;
}

}  // namespace lrkm
