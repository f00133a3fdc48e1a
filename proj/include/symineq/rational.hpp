#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace symineq {

/// Arbitrary-precision integer and exact rational.  Every probability,
/// coordinate and threshold in the library is a Rational; nothing rounds.
using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form.  Throws std::invalid_argument on den == 0.
Rational make_rational(long num, long den = 1);
Rational make_rational(const BigInt& num, const BigInt& den);

/// Accepts "p/q", "p", and plain decimals ("-1.25", "3e-2").  Decimal input is
/// converted exactly.  Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

BigInt floor(const Rational& value);
BigInt ceil(const Rational& value);

/// 15 significant digits, round-half-even, computed from the exact value.
/// Fixed notation for decimal exponents in [-5, 15), scientific otherwise.
std::string to_decimal(const Rational& value, int significant = 15);

/// Exact binary value of a finite double.
Rational from_double(double value);

/// Closest rational to `value` with denominator at most `max_denominator`
/// (continued-fraction convergents plus the final semiconvergent).
Rational limit_denominator(const Rational& value, const BigInt& max_denominator);

BigInt pow(const BigInt& base, unsigned long exponent);

/// Reads a BigInt that fits in 64 bits; throws std::overflow_error otherwise.
std::int64_t to_int64(const BigInt& value);
std::uint64_t to_uint64(const BigInt& value);
BigInt from_int128(__int128 value);

}  // namespace symineq
