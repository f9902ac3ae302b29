#pragma once

#include <cstdint>

namespace fb {

using Coeff = std::uint32_t;

// Arithmetic in Z/p for a prime p < 2^31. Residues are kept in [0, p).
class PrimeField {
 public:
  // Throws Error(NotPrime) unless p is a prime below 2^31.
  explicit PrimeField(std::uint64_t p);

  Coeff characteristic() const noexcept { return p_; }

  Coeff add(Coeff a, Coeff b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Coeff>(s >= p_ ? s - p_ : s);
  }
  Coeff sub(Coeff a, Coeff b) const noexcept {
    return a >= b ? a - b : static_cast<Coeff>(std::uint64_t{a} + p_ - b);
  }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>((std::uint64_t{a} * b) % p_);
  }
  Coeff inv(Coeff a) const;  // a != 0
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;

  // Reduces an arbitrary signed integer into [0, p).
  Coeff from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }

  bool operator==(const PrimeField&) const = default;

 private:
  Coeff p_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace fb
