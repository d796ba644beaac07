#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <cstdio>
#include <limits>
#include <string>

#include "json.hpp"
#include "semirandom/errors.hpp"

namespace semirandom {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

// (x)_k = x (x-1) ... (x-k+1); zero when 0 <= x < k.
inline BigInt falling(long long x, long long k) {
  BigInt result = 1;
  for (long long i = 0; i < k; ++i) result *= (x - i);
  return result;
}

inline BigInt factorial(long long k) { return falling(k, k); }

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ParameterError("rational with zero denominator");
  return Rational(num, den);
}

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline std::string to_string(const Rational& q) {
  BigInt den = denominator_of(q);
  if (den == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + den.str();
}

// Decimal rendering with 12 significant digits.
inline std::string approx_string(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", to_double(q));
  return buf;
}

// Largest integer x with x*x <= v (v >= 0).
inline BigInt isqrt(const BigInt& v) {
  if (v < 0) throw ParameterError("isqrt of a negative number");
  return boost::multiprecision::sqrt(v);
}

inline BigInt floor_of(const Rational& q) {
  BigInt num = numerator_of(q), den = denominator_of(q);
  BigInt quot = num / den;
  if (num < 0 && quot * den != num) quot -= 1;
  return quot;
}

inline BigInt ceil_of(const Rational& q) { return -floor_of(-q); }

inline nlohmann::json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

inline BigInt big_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw ParameterError("expected an integer or an integer string");
}

inline nlohmann::json rational_to_json(const Rational& q) {
  return {{"num", big_to_json(numerator_of(q))},
          {"den", big_to_json(denominator_of(q))},
          {"approx", approx_string(q)}};
}

inline Rational rational_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw ParameterError("rational must be an object with num and den");
  return make_rational(big_from_json(j.at("num")), big_from_json(j.at("den")));
}

}  // namespace semirandom
