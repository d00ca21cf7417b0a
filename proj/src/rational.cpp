#include "nilcone/rational.hpp"

#include <cctype>
#include <string>

#include "nilcone/errors.hpp"

namespace nilcone {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+')
    throw PreconditionError("malformed rational: '" + std::string(text) + "'");
  Integer p(strip_plus(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw PreconditionError("zero denominator in rational: '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational power(const Rational& q, long e) {
  if (e < 0) {
    if (q == 0) throw SingularityError("zero raised to a negative power");
    return power(Rational(1) / q, -e);
  }
  Rational result(1);
  Rational base = q;
  auto k = static_cast<unsigned long>(e);
  while (k != 0) {
    if (k & 1UL) result *= base;
    k >>= 1U;
    if (k != 0) base *= base;
  }
  return result;
}

}  // namespace nilcone
