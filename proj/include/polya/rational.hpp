#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace polya {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parsing a permutation word, a group spec, etc. failed; carries the
// offending position where known.  CLI maps this to exit code 2.
class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string& msg, std::size_t pos = npos)
      : std::runtime_error(msg), position_(pos) {}
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// A configured cap (group closure size, census step budget) was exceeded.
// CLI maps this to exit code 3.
class resource_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

inline Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw parse_error("malformed rational: '" + s + "'");
  }
}

}  // namespace polya
