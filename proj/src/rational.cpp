#include "symineq/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace symineq {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_integer(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  BigInt value;
  value.set_str(std::string(body), 10);
  if (s.front() == '-') value = -value;
  return value;
}

Rational parse_decimal(std::string_view s) {
  bool negative = false;
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = body.substr(e + 1);
    std::string_view exp_digits = exp_text;
    if (!exp_digits.empty() && (exp_digits.front() == '-' || exp_digits.front() == '+'))
      exp_digits.remove_prefix(1);
    if (!all_digits(exp_digits) || exp_digits.size() > 6)
      throw std::invalid_argument("malformed exponent in '" + std::string(s) + "'");
    exponent = std::stol(std::string(exp_text));
    body = body.substr(0, e);
  }
  std::string digits;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = body.substr(0, dot);
    std::string_view frac_part = body.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)))
      throw std::invalid_argument("malformed decimal '" + std::string(s) + "'");
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(body)) throw std::invalid_argument("malformed number '" + std::string(s) + "'");
    digits = std::string(body);
  }
  BigInt mantissa;
  mantissa.set_str(digits, 10);
  if (negative) mantissa = -mantissa;
  BigInt scale = pow(BigInt(10), static_cast<unsigned long>(std::labs(exponent)));
  return exponent >= 0 ? Rational(mantissa * scale) : make_rational(mantissa, scale);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw std::invalid_argument("malformed denominator in '" + std::string(text) + "'");
    BigInt den = parse_integer(den_text);
    return make_rational(num, den);
  }
  return parse_decimal(text);
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

BigInt floor(const Rational& value) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

BigInt ceil(const Rational& value) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

std::string to_decimal(const Rational& value, int significant) {
  if (significant < 1) throw std::invalid_argument("significant digits must be positive");
  if (value == 0) return "0." + std::string(static_cast<std::size_t>(significant - 1), '0');

  const bool negative = value < 0;
  const Rational magnitude = abs(value);
  const BigInt ten(10);

  // 10^e <= magnitude < 10^(e+1)
  long e = static_cast<long>(mpz_sizeinbase(magnitude.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(magnitude.get_den_mpz_t(), 10));
  auto power = [&](long k) {
    return k >= 0 ? Rational(pow(ten, static_cast<unsigned long>(k)))
                  : make_rational(BigInt(1), pow(ten, static_cast<unsigned long>(-k)));
  };
  while (magnitude < power(e)) --e;
  while (magnitude >= power(e + 1)) ++e;

  const Rational scaled = magnitude * power(significant - 1 - e);
  BigInt digits = symineq::floor(scaled);
  const Rational remainder = scaled - Rational(digits);
  const Rational half(1, 2);
  if (remainder > half || (remainder == half && mpz_odd_p(digits.get_mpz_t()))) digits += 1;
  if (digits == pow(ten, static_cast<unsigned long>(significant))) {
    digits /= 10;
    ++e;
  }

  std::string d = digits.get_str();
  std::string out = negative ? "-" : "";
  if (e >= -5 && e < significant) {
    if (e >= 0) {
      out += d.substr(0, static_cast<std::size_t>(e + 1));
      if (static_cast<std::size_t>(e + 1) < d.size()) out += "." + d.substr(static_cast<std::size_t>(e + 1));
    } else {
      out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + d;
    }
  } else {
    out += d.substr(0, 1);
    if (d.size() > 1) out += "." + d.substr(1);
    char buf[32];
    std::snprintf(buf, sizeof buf, "e%c%02ld", e < 0 ? '-' : '+', std::labs(e));
    out += buf;
  }
  return out;
}

Rational from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite double");
  Rational q(value);  // mpq_set_d is exact
  return q;
}

Rational limit_denominator(const Rational& value, const BigInt& max_denominator) {
  if (max_denominator < 1) throw std::invalid_argument("max_denominator must be >= 1");
  if (value.get_den() <= max_denominator) return value;

  BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  BigInt n = value.get_num(), d = value.get_den();
  while (true) {
    BigInt a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    BigInt q2 = q0 + a * q1;
    if (q2 > max_denominator) break;
    BigInt p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    BigInt r = n - a * d;
    n = d;
    d = r;
  }
  BigInt k;
  mpz_fdiv_q(k.get_mpz_t(), BigInt(max_denominator - q0).get_mpz_t(), q1.get_mpz_t());
  Rational semiconvergent = make_rational(BigInt(p0 + k * p1), BigInt(q0 + k * q1));
  Rational convergent = make_rational(p1, q1);
  return abs(convergent - value) <= abs(semiconvergent - value) ? convergent : semiconvergent;
}

std::int64_t to_int64(const BigInt& value) {
  if (!value.fits_slong_p()) throw std::overflow_error("integer exceeds 64 bits: " + value.get_str());
  return value.get_si();
}

std::uint64_t to_uint64(const BigInt& value) {
  if (!value.fits_ulong_p()) throw std::overflow_error("integer exceeds unsigned 64 bits: " + value.get_str());
  return value.get_ui();
}

BigInt from_int128(__int128 value) {
  const bool negative = value < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(value + 1)) + 1
                                 : static_cast<unsigned __int128>(value);
  BigInt hi(static_cast<unsigned long>(u >> 64));
  BigInt lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
  BigInt out = (hi << 64) + lo;
  return negative ? BigInt(-out) : out;
}

}  // namespace symineq
