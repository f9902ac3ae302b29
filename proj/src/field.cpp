#include "fb/field.hpp"

#include <string>

#include "fb/error.hpp"

namespace fb {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw Error(ErrorKind::NotPrime,
                "characteristic " + std::to_string(p) + " is not a prime below 2^31");
  p_ = static_cast<Coeff>(p);
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const noexcept {
  std::uint64_t base = a % p_, acc = 1 % p_;
  while (e > 0) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Coeff>(acc);
}

Coeff PrimeField::inv(Coeff a) const {
  // extended Euclid
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t quotient = r / new_r;
    std::int64_t tmp = t - quotient * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quotient * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw Error(ErrorKind::ZeroDivisorQuery, "inverse of zero in prime field");
  return from_int(t);
}

}  // namespace fb
