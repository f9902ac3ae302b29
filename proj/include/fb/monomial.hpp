#pragma once

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace fb {

using Exponent = std::uint32_t;
using Degree = std::int64_t;

// Exponent vector with cached total degree. Exponents are 32-bit; any
// operation that would leave that range throws Error(Overflow).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<Exponent> exps);
  explicit Monomial(std::span<const Exponent> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const noexcept;
  // this / divisor; requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const noexcept;
  Monomial scaled(std::uint64_t factor) const;  // exponents multiplied
  std::span<const Exponent> exponents() const noexcept { return {exps_.data(), exps_.size()}; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

 private:
  boost::container::small_vector<Exponent, 8> exps_;
  std::uint64_t degree_ = 0;
};

// Graded reverse lexicographic comparison: negative if a < b, 0 if equal,
// positive if a > b. Higher degree is larger; ties are broken by the last
// variable where the exponents differ, the smaller exponent winning.
int compare_degrevlex(const Monomial& a, const Monomial& b) noexcept;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

std::string format_monomial(const Monomial& m, std::span<const std::string> names);

}  // namespace fb
