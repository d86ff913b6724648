#include "lefschetz/rational.hpp"

#include "lefschetz/errors.hpp"

#include <cctype>

namespace lefschetz {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw InputError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

namespace {

bool is_signed_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

} // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_signed_integer(num) || !is_signed_integer(den) || den.front() == '-' || den.front() == '+')
    throw InputError("malformed rational '" + std::string(text) + "'");
  mpz_class p(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw InputError("rational with zero denominator '" + std::string(text) + "'");
  mpq_class v(p, q);
  return Rational(v);
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero()) throw InternalInconsistency("division by zero rational");
  value_ /= o.value_;
  return *this;
}

Rational factorial(unsigned n) {
  mpz_class f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return Rational(mpq_class(f));
}

} // namespace lefschetz
