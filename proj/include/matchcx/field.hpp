#pragma once

#include "matchcx/integer.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace matchcx {

// Prime field Z/p with p < 2^31.
class ModPField {
 public:
  using Elem = std::uint32_t;

  explicit ModPField(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1U << 31)) throw std::invalid_argument("unsupported modulus");
    for (std::uint32_t q = 2; q * q <= p; ++q)
      if (p % q == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
  }

  std::uint32_t characteristic() const { return p_; }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} + b) % p_); }
  Elem sub(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} + p_ - b) % p_); }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint64_t{a} * b % p_); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr) {
      std::int64_t q = r / nr;
      std::tie(t, nt) = std::pair{nt, t - q * nt};
      std::tie(r, nr) = std::pair{nr, r - q * nr};
    }
    return static_cast<Elem>(t < 0 ? t + p_ : t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem from_integer(const Integer& z) const {
    return static_cast<Elem>(mpz_fdiv_ui(z.get_mpz_t(), p_));
  }
  Integer to_integer(Elem a) const { return Integer(static_cast<unsigned long>(a)); }

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using Elem = Rational;

  std::uint32_t characteristic() const { return 0; }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }
  Elem from_integer(const Integer& z) const { return Rational(z); }
};

}  // namespace matchcx
