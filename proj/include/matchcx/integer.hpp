#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace matchcx {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer to_integer(std::int64_t v) {
  Integer z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool fits_int64(const Integer& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

inline std::int64_t to_int64(const Integer& z) { return static_cast<std::int64_t>(mpz_get_si(z.get_mpz_t())); }

}  // namespace matchcx
