#pragma once

#include <cstdint>
#include <vector>

#include "fb/resolution.hpp"

namespace fb {

// Level e of the Frobenius endomorphism; q = p^e.
class BracketLevel {
 public:
  // Throws Error(Overflow) if p^e does not fit in 32 bits.
  BracketLevel(std::uint64_t p, unsigned e);

  unsigned e() const noexcept { return e_; }
  std::uint64_t q() const noexcept { return q_; }

 private:
  unsigned e_;
  std::uint64_t q_;
};

// f^q by exponent scaling; coefficients are fixed by Frobenius on F_p.
Polynomial frobenius_power(const Polynomial& f, const BracketLevel& level);
std::vector<Polynomial> bracket_ideal(std::span<const Polynomial> gens, const BracketLevel& level);
// Entry-wise bracket power; column degrees scale by q relative to the rows.
Matrix bracket_matrix(const Matrix& a, const BracketLevel& level);

// The complex (G_j(q-scaled twists), phi_j^[q]), entries reduced modulo I.
FreeComplex twist_complex(const FreeComplex& g, const BracketLevel& level);

}  // namespace fb
