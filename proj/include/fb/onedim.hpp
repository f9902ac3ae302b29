#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fb/asymptotics.hpp"

namespace fb {

// H^0_m(R) = (I : m^infinity) / I as minimal generators in R; empty when
// R is Cohen-Macaulay of positive dimension.
std::vector<Polynomial> h0_ring(const RingPtr& ring, const GroebnerOptions& options = {});

// Every entry of phi_{i+1} of the minimal resolution lies in H^0_m(R).
// Requires dim R = 1 (WrongDimension) and lambda(M) finite (InfiniteLength).
bool decide_beta_vanishing(const SubmodulePresentation& m, std::size_t i,
                           const GroebnerOptions& options = {});
// Same test on a resolution through spot i + 1 and precomputed H^0 generators.
bool entries_in_h0(const MinimalResolution& res, std::size_t i, std::span<const Polynomial> h0);

struct PrimeTorReport {
  std::vector<Polynomial> prime;
  std::vector<std::pair<unsigned, std::uint64_t>> levels;  // (e, lambda(Tor_i(M, ^e(R/p))))
  bool all_zero = true;
  std::optional<unsigned> first_nonzero;
};

std::vector<PrimeTorReport> tor_vanishing_vs_minimal_primes(
    const SubmodulePresentation& m, std::size_t i, const std::vector<std::vector<Polynomial>>& primes,
    unsigned emin, unsigned emax, const GroebnerOptions& options = {});

struct FinitePdDecision {
  bool finite = false;
  bool cohen_macaulay = false;
  std::string rule;  // cm_single_index or general_two_indices
  std::vector<std::size_t> betti;
  // Index of the first zero Betti number when the verdict is finite.
  std::optional<std::size_t> certificate;
};

FinitePdDecision decide_finite_pd_1dim(const SubmodulePresentation& m, std::size_t i,
                                       const GroebnerOptions& options = {});

struct ParameterChoice {
  Polynomial y;
  unsigned n = 1;
  Polynomial x;  // y^n
  bool is_parameter = false;      // dim R/(y) = 0
  bool kills_h0 = false;          // x * H^0 = 0
  bool h0_is_annihilator = false; // H^0 = (0 :_R x)
  std::optional<bool> kills_module;
  bool verified() const {
    return is_parameter && kills_h0 && h0_is_annihilator && kills_module.value_or(true);
  }
};

// Tries the variables, then up to 50 seeded random linear forms. The flags
// are recomputed from scratch after the choice is made.
ParameterChoice choose_parameter(const RingPtr& ring, const SubmodulePresentation* annihilate = nullptr,
                                 std::uint64_t seed = 1, const GroebnerOptions& options = {});

struct XiReport {
  bool applicable = false;
  std::string reason;  // failed hypothesis when inapplicable
  std::optional<ParameterChoice> parameter;
  std::vector<std::uint64_t> tor;  // lambda(Tor_j(M, R/(x))), j = 0..i
  std::uint64_t syzygy_length = 0;
  std::int64_t alternating_sum = 0;
  bool holds = false;
};

XiReport xi_alternating_sum_check(const SubmodulePresentation& m, std::size_t i,
                                  std::uint64_t seed = 1, const GroebnerOptions& options = {});

enum class CheckStatus { Holds, Violated, Vacuous };
std::string to_string(CheckStatus s);

struct LemmaReport {
  CheckStatus status = CheckStatus::Vacuous;
  std::optional<std::uint64_t> tor_length;
};

LemmaReport lemma_h0_check(const SubmodulePresentation& m, std::size_t i,
                           const GroebnerOptions& options = {});
// Same check on a resolution through spot i + 1.
LemmaReport lemma_h0_check(const SubmodulePresentation& m, const MinimalResolution& res,
                           std::size_t i, std::span<const Polynomial> h0);

struct SurveyRow {
  std::size_t index;
  std::size_t betti;
  int dimension;
  Length length;
};

struct SurveyCheck {
  std::string law;  // dimsyz, first_third_infinite, one_dim, lemma_h0, buchsbaum_bound
  std::size_t index;
  CheckStatus status;
  std::string detail;
};

struct SurveyReport {
  int ring_dimension;
  Length module_length;
  std::vector<SurveyRow> rows;
  std::vector<SurveyCheck> checks;
  bool no_violations() const;
};

SurveyReport syzygy_length_survey(const SubmodulePresentation& m, std::size_t i_max,
                                  const GroebnerOptions& options = {});

// Minimal primes of a monomial ideal as variable-generated ideals, via
// minimal vertex covers of the generator supports. Error(NotMonomial).
std::vector<std::vector<Polynomial>> minimal_primes_monomial(const RingPtr& ring,
                                                             std::span<const Polynomial> gens);

enum class BuchsbaumFlag { Fails, NecessaryConditionHolds, HoldsVacuously };
std::string to_string(BuchsbaumFlag f);

// Tests m * H^0_m(R) = 0 only; never asserts the Buchsbaum property.
BuchsbaumFlag buchsbaum_flag(const RingPtr& ring, const GroebnerOptions& options = {});

struct DiagnosisReport {
  std::size_t index;
  bool condition_i;  // entries of phi_{i+1} in H^0_m(R)
  std::vector<PrimeTorReport> condition_iii;
  AsymptoticEstimate beta_estimate;
  // condition_i agrees with the sampled Tor data and the estimator.
  bool consistent;
  std::optional<FinitePdDecision> finite_pd;  // for i >= 1
};

// primes default to the monomial minimal primes of I.
DiagnosisReport diagnose(const SubmodulePresentation& m, std::size_t i,
                         std::optional<std::vector<std::vector<Polynomial>>> primes,
                         const SequenceOptions& options = {});

}  // namespace fb
