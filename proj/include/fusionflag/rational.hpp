#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fusionflag {

/// Exact rational scalar used throughout the library.
using Rat = mpq_class;
using Int = mpz_class;

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int to_integer(const Rat& q) {
  if (!is_integer(q)) throw std::runtime_error("expected integer, got " + q.get_str());
  return q.get_num();
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
  Rat acc = 1, b = base;
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

/// Parses "p" or "p/q" with an optional leading sign.
inline Rat rat_from_string(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace fusionflag
