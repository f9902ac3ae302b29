#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fb/polynomial.hpp"

namespace fbtest {

// Seeded generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  fb::Monomial monomial(std::size_t nvars, std::uint64_t max_exp) {
    std::vector<fb::Exponent> e(nvars);
    for (auto& v : e) v = static_cast<fb::Exponent>(uniform(0, max_exp));
    return fb::Monomial(std::span<const fb::Exponent>(e));
  }

  fb::Monomial monomial_of_degree(std::size_t nvars, std::uint64_t degree) {
    std::vector<fb::Exponent> e(nvars, 0);
    for (std::uint64_t k = 0; k < degree; ++k) ++e[uniform(0, nvars - 1)];
    return fb::Monomial(std::span<const fb::Exponent>(e));
  }

  // Arbitrary (possibly inhomogeneous) polynomial.
  fb::Polynomial polynomial(const fb::PrimeField& f, std::size_t nvars, std::size_t terms,
                            std::uint64_t max_exp) {
    std::vector<fb::Term> ts;
    for (std::size_t i = 0; i < terms; ++i)
      ts.push_back({static_cast<fb::Coeff>(uniform(0, f.characteristic() - 1)), monomial(nvars, max_exp)});
    return fb::Polynomial::from_terms(f, nvars, std::move(ts));
  }

  fb::Polynomial homogeneous(const fb::PrimeField& f, std::size_t nvars, std::size_t terms,
                             std::uint64_t degree) {
    std::vector<fb::Term> ts;
    for (std::size_t i = 0; i < terms; ++i)
      ts.push_back({static_cast<fb::Coeff>(uniform(1, f.characteristic() - 1)),
                    monomial_of_degree(nvars, degree)});
    return fb::Polynomial::from_terms(f, nvars, std::move(ts));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace fbtest
