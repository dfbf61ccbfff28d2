#include "spincq/rational.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "spincq/errors.hpp"

namespace spincq {

Rational frac(long num, long den) {
  if (den == 0) throw PreconditionViolated("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  auto dot_pos = s.find('.');
  if (dot_pos != std::string::npos) {
    std::string whole = s.substr(0, dot_pos);
    std::string decimals = s.substr(dot_pos + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (negative || (!whole.empty() && whole[0] == '+')) whole = whole.substr(1);
    if (whole.empty()) whole = "0";
    if (decimals.empty() || decimals.find_first_not_of("0123456789") != std::string::npos ||
        whole.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad decimal: " + s);
    mpz_class num(whole + decimals, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, decimals.size());
    Rational r(num, den);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }
  if (s[0] == '+') s = s.substr(1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("bad rational: " + std::string(text));
  if (r.get_den() == 0) throw ParseError("zero denominator: " + std::string(text));
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

bool is_half_integer(const Rational& value) {
  return value.get_den() == 1 || value.get_den() == 2;
}

std::int64_t to_int64(const Rational& value) {
  if (!is_integer(value)) throw PreconditionViolated("not an integer: " + to_string(value));
  const mpz_class& n = value.get_num();
  if (!n.fits_slong_p()) throw PreconditionViolated("integer out of range");
  return n.get_si();
}

std::int64_t floor_int(const Rational& value) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  if (!out.fits_slong_p()) throw PreconditionViolated("integer out of range");
  return out.get_si();
}

std::int64_t ceil_int(const Rational& value) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  if (!out.fits_slong_p()) throw PreconditionViolated("integer out of range");
  return out.get_si();
}

int sign(const Rational& value) { return sgn(value); }

Rational dot(const IntVector& a, const Covector& b) {
  if (a.size() != b.size()) throw PreconditionViolated("dimension mismatch in pairing");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(static_cast<long>(a[i])) * b[i];
  return s;
}

Covector to_covector(const IntVector& v) {
  Covector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

std::int64_t ceil_sqrt(const Rational& value) {
  if (value <= 0) return 0;
  std::int64_t b = static_cast<std::int64_t>(std::sqrt(value.get_d()));
  if (b > 0) --b;
  while (Rational(static_cast<long>(b) * static_cast<long>(b)) < value) ++b;
  return b;
}

}  // namespace spincq
