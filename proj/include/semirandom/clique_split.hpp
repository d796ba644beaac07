#pragma once

#include "semirandom/rational.hpp"

// The split level used by the clique strategy: L is a clique on `level` vertices built
// first, and the remaining k - level vertices are found as a rooted multigraph.

namespace semirandom {

// ((k)_s - (l)_s) / (k - l).
inline Rational falling_factorial_quotient(long long k, long long l, long long s) {
  if (k <= l || l < 0) throw ParameterError("falling factorial quotient needs k > l >= 0");
  return make_rational(falling(k, s) - falling(l, s), k - l);
}

// Left-hand side of the split constraint; the level is admissible when this is <= 0:
// k-l-r - (k-l)/(C(k,s)-C(l,s)) * sum_{j=1..r} C(l,s-j) [C(k-l,j) - C(r,j)].
inline Rational clique_split_slack(long long r, long long s, long long k, long long l) {
  if (!(2 <= r && r < s && s <= k)) throw ParameterError("split level needs 2 <= r < s <= k");
  if (l < 0 || l >= k) throw ParameterError("split level must lie in [0, k)");
  BigInt sum = 0;
  for (long long j = 1; j <= r; ++j) sum += binom(l, s - j) * (binom(k - l, j) - binom(r, j));
  return Rational(k - l - r) - make_rational(BigInt(k - l) * sum, binom(k, s) - binom(l, s));
}

// Smallest admissible level in [max(1, s-r), k-r]; k-r always satisfies the constraint with equality.
inline long long clique_split_level(long long r, long long s, long long k) {
  if (!(2 <= r && r < s && s <= k)) throw ParameterError("split level needs 2 <= r < s <= k");
  for (long long l = std::max<long long>(1, s - r); l <= k - r; ++l)
    if (clique_split_slack(r, s, k, l) <= 0) return l;
  throw ParameterError("no admissible split level");  // unreachable: l = k - r is admissible
}

// r - (k-l)/(C(k,s) - C(l,s)).
inline Rational clique_upper_exponent(long long r, long long s, long long k, long long l) {
  return Rational(r) - make_rational(k - l, binom(k, s) - binom(l, s));
}

// For r = 2, s = 3: ceil(k + 3/2 - sqrt(6k + 1/4)) = ceil((2k + 3 - sqrt(24k + 1)) / 2),
// evaluated with the integer square root. If q = isqrt(24k+1) and A = 2k+3-q, the
// true value lies in ((A-1)/2, A/2], whose ceiling is ceil(A/2) in every case.
inline long long split_level_closed_form(long long k) {
  if (k < 3) throw ParameterError("closed form needs k >= 3");
  BigInt q = isqrt(BigInt(24 * k + 1));
  BigInt a = BigInt(2 * k + 3) - q;
  long long av = a.convert_to<long long>();
  return av >= 0 ? (av + 1) / 2 : -((-av) / 2);
}

}  // namespace semirandom
