#include "toricfano/arithmetic.hpp"

namespace toricfano {

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    const Integer den(text.substr(slash + 1));
    if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + text + "'");
    return Rational(Integer(text.substr(0, slash)), den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e) != nullptr) throw;
    throw Error(Errc::ParseError, "not a rational: '" + text + "'");
  }
}

}  // namespace toricfano
