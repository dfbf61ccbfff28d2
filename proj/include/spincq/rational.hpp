#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace spincq {

using Rational = mpq_class;
using IntVector = std::vector<std::int64_t>;
using Covector = std::vector<Rational>;

Rational frac(long num, long den = 1);

// Accepts "p", "p/q", and finite decimals such as "-5.25".
Rational parse_rational(std::string_view text);

// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);
bool is_half_integer(const Rational& value);  // 2x integral
std::int64_t to_int64(const Rational& value);  // throws if not integral or too large
std::int64_t floor_int(const Rational& value);
std::int64_t ceil_int(const Rational& value);
int sign(const Rational& value);

Rational dot(const IntVector& a, const Covector& b);
Covector to_covector(const IntVector& v);

// Smallest integer B >= 0 with B*B >= value.
std::int64_t ceil_sqrt(const Rational& value);

}  // namespace spincq
