#include "nonroot/rational.hpp"

#include "nonroot/errors.hpp"

#include <cctype>

namespace nonroot {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw InputError("not a rational literal: '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational floor(const Rational& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return Rational(q);
}

Rational frac(const Rational& value) {
  Rational r = value - floor(value);
  return r;
}

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

Rational dyadic_floor(const Rational& bound, unsigned min_exponent) {
  Rational p(1);
  for (unsigned i = 0; i < min_exponent; ++i) p /= 2;
  while (p > bound) p /= 2;
  return p;
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace nonroot
