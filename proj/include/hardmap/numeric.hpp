// Small helpers on top of GMP: rational parsing/printing, binomials with the
// zero-outside-range convention, and logs of huge rationals via mantissa+exponent.
#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace hardmap {

// mpq_class(a, b) does not reduce; this does. Use it for any fraction whose
// gcd is not obviously 1.
inline mpq_class frac(long a, long b) {
  mpq_class q(a, b);
  q.canonicalize();
  return q;
}

// Accepts "a", "-a", "a/b" with optional sign on the numerator. Throws
// std::invalid_argument on anything else (including b == 0).
mpq_class parse_rational(const std::string& text);

// Canonical form, "a" when the denominator is 1, otherwise "a/b".
std::string rational_to_string(const mpq_class& q);

// binomial(a, b) with C(a, b) = 0 unless 0 <= b <= a. Requires a >= 0.
// Backed by a process-wide factorial cache, safe for concurrent readers only
// after ensure_factorials() has grown the cache far enough.
mpz_class binomial(long a, long b);
void ensure_factorials(long n);

// Natural log of a positive rational whose num/den may have thousands of bits.
double log_mpz(const mpz_class& z);
double log_mpq(const mpq_class& q);

}  // namespace hardmap
