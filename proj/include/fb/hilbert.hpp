#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fb/monomial.hpp"

namespace fb {

// Length of a module: a natural number or infinite.
class Length {
 public:
  static Length finite(std::uint64_t v) { return Length(false, v); }
  static Length infinite() { return Length(true, 0); }

  bool is_finite() const noexcept { return !infinite_; }
  std::uint64_t value() const;  // throws Error(InfiniteLength) when infinite
  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

  friend bool operator==(const Length&, const Length&) = default;

 private:
  Length(bool inf, std::uint64_t v) : infinite_(inf), value_(v) {}
  bool infinite_;
  std::uint64_t value_;
};

// Laurent polynomial in t with integer coefficients, sparse by degree.
using TPolynomial = std::map<Degree, std::int64_t>;

// Hilbert series N(t) / (1-t)^n of a graded module over F_p[x_1..x_n].
struct HilbertSeries {
  std::size_t nvars = 0;
  TPolynomial numerator;

  // Krull dimension: order of the pole at t = 1; -1 for the zero module.
  int dimension() const;
  // Sum of the Hilbert function; infinite exactly when dimension() > 0.
  Length length() const;
  // Hilbert function values for degrees lo..hi inclusive.
  std::vector<std::int64_t> values(Degree lo, Degree hi) const;

  HilbertSeries& operator+=(const HilbertSeries& other);
  HilbertSeries& operator-=(const HilbertSeries& other);
  HilbertSeries shifted(Degree by) const;
};

// Numerator of the Hilbert series of S/L for the monomial ideal L.
TPolynomial hilbert_numerator(std::size_t nvars, std::vector<Monomial> generators);

// dim S/L as the size of a largest variable set supporting no generator of
// L; -1 when L is the unit ideal.
int independent_set_dimension(std::size_t nvars, std::span<const Monomial> generators);

// Drops generators divisible by another generator; sorted, deduplicated.
std::vector<Monomial> minimalize(std::vector<Monomial> generators);

}  // namespace fb
