#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nilcone {

/// Exact rational number, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q". Throws PreconditionError on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// q^e for any integer e; e < 0 requires q != 0 (SingularityError otherwise).
Rational power(const Rational& q, long e);

}  // namespace nilcone
