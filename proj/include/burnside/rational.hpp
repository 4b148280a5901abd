#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace burnside {

// Exact rational scalar.  All ring computations use this type; no floating
// point is used anywhere in the library.
using Rat = mpq_class;

// Canonical "p/q" form; integers render without the "/1".
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (s.empty() || r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal '" + s + "'");
  r.canonicalize();
  return r;
}

// True when no prime of `primes` divides the denominator of r, i.e. r lies
// in the subring of rationals with denominators prime to `primes`.
inline bool denominator_avoids(const Rat& r, const std::vector<int>& primes) {
  const mpz_class den = r.get_den();
  for (int p : primes)
    if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p)))
      return false;
  return true;
}

}  // namespace burnside
