#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fb/homology.hpp"

namespace fb {

using Rational = boost::rational<std::int64_t>;

enum class SequenceKind { HilbertKunz, Beta, Mu };
std::string to_string(SequenceKind kind);

struct Level {
  unsigned e;
  std::uint64_t q;
  std::uint64_t raw;
  Rational normalized;  // raw / q^d
};

struct AsymptoticEstimate {
  SequenceKind kind;
  std::size_t index = 0;
  int d = 0;
  std::vector<Level> levels;  // sorted by e
  std::optional<Rational> estimate;
  bool stabilized = false;

  // (raw_{k+1} - raw_k) / (q_{k+1}^d - q_k^d); for d = 0 the raw values.
  std::vector<Rational> differences() const;
};

// Builds the estimate from raw values: the last first-difference quotient,
// stabilized when the last two agree exactly.
AsymptoticEstimate estimate_from_levels(SequenceKind kind, std::size_t index, int d,
                                        std::vector<std::pair<unsigned, std::uint64_t>> raw,
                                        std::uint64_t p);

struct SequenceOptions {
  unsigned emin = 1;
  unsigned emax = 3;
  std::size_t threads = 1;
  GroebnerOptions groebner;
};

// lambda(R/(J^[q] + I)); throws Error(NotPrimary) unless dim R/J <= 0.
AsymptoticEstimate hk_sequence(const RingPtr& ring, std::span<const Polynomial> j,
                               const SequenceOptions& options = {});
// lambda(Tor_i(M, ^eN)) with N = R or R/p, normalized by q^{dim R}.
AsymptoticEstimate beta_sequence(const SubmodulePresentation& m, std::size_t i,
                                  const SequenceOptions& options = {},
                                  const Coefficients& n = Coefficients::ring());
// lambda(Ext^i(M, ^eR)).
AsymptoticEstimate mu_sequence(const SubmodulePresentation& m, std::size_t i,
                               const SequenceOptions& options = {});

struct PrimeData {
  std::vector<Polynomial> generators;
  std::uint64_t multiplicity;  // lambda(R_p)
};

struct LawOptions {
  std::size_t max_index = 1;
  SequenceOptions sequence;
  Rational tolerance{1, 20};
  bool additivity = false;
  std::optional<std::vector<PrimeData>> primes;
  // x in ann(M), a nonzerodivisor on R
  std::optional<Polynomial> nonzerodivisor;
};

struct LawCheck {
  std::string law;  // bass, duality, additivity, nonzerodivisor
  std::size_t index;
  Rational lhs;
  Rational rhs;
  bool exact;   // both sides stabilized and equal
  bool passed;  // within tolerance (or exact where required)
};

struct LawReport {
  std::vector<LawCheck> checks;
  bool all_passed() const;
};

// Checks the limit laws on the estimates; additivity needs `primes`
// (Error(MissingMultiplicities) otherwise).
LawReport verify_laws(const SubmodulePresentation& m, const LawOptions& options);

double to_double(const Rational& r);
std::string format_rational(const Rational& r);

}  // namespace fb
