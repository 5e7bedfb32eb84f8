// Exact rational scalars and small helpers shared by the whole library.
// All arithmetic is GMP-backed; nothing in this project uses floating
// point except the certified interval refinement in real_sign.hpp.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace l2link {

using Rational = mpq_class;

class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "p/q", with optional sign.
inline Rational parse_rational(const std::string& s) {
  try {
    Rational r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw error("bad rational literal: '" + s + "'");
  }
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline long rational_to_long(const Rational& r) {
  if (r.get_den() != 1 || !r.get_num().fits_slong_p())
    throw error("expected a small integer, got " + to_string(r));
  return r.get_num().get_si();
}

// Binomial coefficient C(n, k) for small exact expansions.
inline Rational binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rational(b);
}

inline long gcd_long(long a, long b) {
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

// Euler's totient, trial division; conductors here are desk-scale.
inline long euler_phi(long n) {
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace l2link
