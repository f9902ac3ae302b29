#include "fb/onedim.hpp"

#include <bit>
#include <random>
#include <stdexcept>

#include "fb/error.hpp"

namespace fb {

namespace {

void require_dimension_one(const RingPtr& ring, const char* what) {
  if (ring->dimension() != 1)
    throw Error(ErrorKind::WrongDimension,
                std::string(what) + " needs dim R = 1, got " + std::to_string(ring->dimension()));
}

void require_finite_length(const SubmodulePresentation& m, const char* what) {
  if (!m.length().is_finite())
    throw Error(ErrorKind::InfiniteLength, std::string(what) + " needs a module of finite length");
}

ModuleElement scalar_vector(const Polynomial& f) { return ModuleElement(std::vector<Polynomial>{f}); }

SubmodulePresentation zero_ideal(const RingPtr& ring, const GroebnerOptions& options) {
  return SubmodulePresentation(ring, Matrix::zero(ring->field(), ring->nvars(), {0}, {}),
                               PresentationMode::Submodule, options);
}

std::vector<PrimeTorReport> prime_tor(const MinimalResolution& res, std::size_t i,
                                      const std::vector<std::vector<Polynomial>>& primes, unsigned emin,
                                      unsigned emax, const GroebnerOptions& options) {
  std::vector<PrimeTorReport> out;
  for (const auto& p : primes) {
    PrimeTorReport rep{p, {}, true, std::nullopt};
    for (unsigned e = emin; e <= emax; ++e) {
      std::uint64_t len = tor_length(res, i, e, Coefficients::quotient(p), options);
      rep.levels.emplace_back(e, len);
      if (len != 0 && rep.all_zero) {
        rep.all_zero = false;
        rep.first_nonzero = e;
      }
    }
    out.push_back(std::move(rep));
  }
  return out;
}

// res must reach spot i + 2 so that index 2 is covered for i >= 1.
FinitePdDecision finite_pd_from(const MinimalResolution& res, std::size_t i,
                                std::span<const Polynomial> h0) {
  FinitePdDecision d;
  d.cohen_macaulay = h0.empty();
  d.betti = res.betti;
  bool at_i = entries_in_h0(res, i, h0);
  if (d.cohen_macaulay) {
    d.rule = "cm_single_index";
    d.finite = at_i;
  } else {
    d.rule = "general_two_indices";
    d.finite = at_i && entries_in_h0(res, i + 1, h0);
  }
  if (d.finite)
    for (std::size_t j = 0; j < res.betti.size(); ++j)
      if (res.betti[j] == 0) {
        d.certificate = j;
        break;
      }
  return d;
}

ParameterChoice check_parameter(const RingPtr& ring, const Polynomial& y, unsigned n,
                                std::span<const Polynomial> h0, const SubmodulePresentation* annihilate,
                                const GroebnerOptions& options) {
  Polynomial x = y.pow(n);
  ParameterChoice c{y, n, x, false, false, false, std::nullopt};
  std::vector<Polynomial> yy{y};
  c.is_parameter = ring->quotient_by(yy)->dimension() == 0;
  c.kills_h0 = true;
  for (const auto& h : h0)
    if (!ring->reduce(x * h).is_zero()) c.kills_h0 = false;
  if (annihilate) {
    bool kills = true;
    for (std::size_t k = 0; k < annihilate->rank() && kills; ++k) {
      ModuleElement v(ring->field(), ring->nvars(), annihilate->rank());
      v[k] = x;
      if (!annihilate->contains(v)) kills = false;
    }
    c.kills_module = kills;
  }
  if (c.is_parameter && c.kills_h0) {
    auto colon = ideal_quotient(zero_ideal(ring, options), x);
    c.h0_is_annihilator = colon.same_span(SubmodulePresentation::ideal(ring, h0));
  }
  return c;
}

}  // namespace

std::vector<Polynomial> h0_ring(const RingPtr& ring, const GroebnerOptions& options) {
  auto sat = saturate_at_irrelevant(zero_ideal(ring, options));
  std::vector<Polynomial> out;
  for (const auto& col : sat.generators().columns()) {
    Polynomial f = ring->reduce(col[0]);
    if (!f.is_zero()) out.push_back(std::move(f));
  }
  return out;
}

bool entries_in_h0(const MinimalResolution& res, std::size_t i, std::span<const Polynomial> h0) {
  const FreeComplex& c = res.complex;
  if (c.length() < i + 1) throw std::invalid_argument("entries_in_h0: resolution too short");
  const RingPtr& ring = c.ring();
  auto ideal = SubmodulePresentation::ideal(ring, h0);
  for (const auto& col : c.map(i + 1).columns())
    for (std::size_t r = 0; r < col.rank(); ++r) {
      Polynomial f = ring->reduce(col[r]);
      if (!f.is_zero() && !ideal.contains(scalar_vector(f))) return false;
    }
  return true;
}

bool decide_beta_vanishing(const SubmodulePresentation& m, std::size_t i, const GroebnerOptions& options) {
  require_dimension_one(m.ring(), "decide_beta_vanishing");
  require_finite_length(m, "decide_beta_vanishing");
  auto res = resolve(m, i + 1, true, options);
  auto h0 = h0_ring(m.ring(), options);
  return entries_in_h0(res, i, h0);
}

std::vector<PrimeTorReport> tor_vanishing_vs_minimal_primes(
    const SubmodulePresentation& m, std::size_t i, const std::vector<std::vector<Polynomial>>& primes,
    unsigned emin, unsigned emax, const GroebnerOptions& options) {
  require_dimension_one(m.ring(), "tor_vanishing_vs_minimal_primes");
  require_finite_length(m, "tor_vanishing_vs_minimal_primes");
  auto res = resolve(m, i + 1, true, options);
  return prime_tor(res, i, primes, emin, emax, options);
}

FinitePdDecision decide_finite_pd_1dim(const SubmodulePresentation& m, std::size_t i,
                                       const GroebnerOptions& options) {
  require_dimension_one(m.ring(), "decide_finite_pd_1dim");
  require_finite_length(m, "decide_finite_pd_1dim");
  if (i < 1) throw std::invalid_argument("decide_finite_pd_1dim: probe index must be at least 1");
  auto res = resolve(m, i + 2, true, options);
  auto h0 = h0_ring(m.ring(), options);
  return finite_pd_from(res, i, h0);
}

ParameterChoice choose_parameter(const RingPtr& ring, const SubmodulePresentation* annihilate,
                                 std::uint64_t seed, const GroebnerOptions& options) {
  require_dimension_one(ring, "choose_parameter");
  auto h0 = h0_ring(ring, options);
  std::vector<Polynomial> candidates = ring->variables();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Coeff> coeff(0, ring->characteristic() - 1);
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::vector<Term> terms;
    for (std::size_t v = 0; v < ring->nvars(); ++v)
      terms.push_back({coeff(rng), Monomial::variable(ring->nvars(), v)});
    Polynomial f = Polynomial::from_terms(ring->field(), ring->nvars(), std::move(terms));
    if (!f.is_zero()) candidates.push_back(std::move(f));
  }
  constexpr unsigned max_exponent = 64;
  for (const auto& y : candidates) {
    std::vector<Polynomial> yy{y};
    if (ring->quotient_by(yy)->dimension() != 0) continue;
    for (unsigned n = 1; n <= max_exponent; ++n) {
      auto c = check_parameter(ring, y, n, h0, annihilate, options);
      if (c.verified()) return c;
    }
  }
  throw Error(ErrorKind::NoParameterFound,
              "no suitable parameter among the variables and 50 random linear forms; "
              "retry with another --seed or a larger characteristic");
}

XiReport xi_alternating_sum_check(const SubmodulePresentation& m, std::size_t i, std::uint64_t seed,
                                  const GroebnerOptions& options) {
  require_dimension_one(m.ring(), "xi_alternating_sum_check");
  XiReport rep;
  if (m.is_zero()) {
    rep.reason = "zero module";
    return rep;
  }
  if (!m.length().is_finite()) {
    rep.reason = "infinite length";
    return rep;
  }
  if (i < 2) {
    rep.reason = "index below 2";
    return rep;
  }
  auto res = resolve(m, i + 2, true, options);
  for (std::size_t j = 0; j <= i + 2; ++j)
    if (res.betti[j] == 0) {
      rep.reason = "finite projective dimension";
      return rep;
    }
  auto omega = syzygy(m, res, i + 1);
  if (!omega.length.is_finite()) {
    rep.reason = "infinite syzygy length";
    return rep;
  }
  rep.applicable = true;
  rep.syzygy_length = omega.length.value();
  rep.parameter = choose_parameter(m.ring(), &m, seed, options);
  std::vector<Polynomial> x{rep.parameter->x};
  for (std::size_t j = 0; j <= i; ++j) {
    std::uint64_t t = tor_length(res, j, 0, Coefficients::quotient(x), options);
    rep.tor.push_back(t);
    std::int64_t sign = (i - j + 1) % 2 == 0 ? 1 : -1;
    rep.alternating_sum += sign * static_cast<std::int64_t>(t);
  }
  rep.holds = rep.alternating_sum == static_cast<std::int64_t>(rep.syzygy_length);
  return rep;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Holds: return "holds";
    case CheckStatus::Violated: return "violated";
    case CheckStatus::Vacuous: return "vacuous";
  }
  return "?";
}

LemmaReport lemma_h0_check(const SubmodulePresentation& m, std::size_t i, const GroebnerOptions& options) {
  if (i < 1 || !m.length().is_finite()) return {};
  auto res = resolve(m, i + 1, true, options);
  auto h0 = h0_ring(m.ring(), options);
  return lemma_h0_check(m, res, i, h0);
}

LemmaReport lemma_h0_check(const SubmodulePresentation& m, const MinimalResolution& res, std::size_t i,
                           std::span<const Polynomial> h0) {
  if (i < 1 || !m.length().is_finite()) return {};
  if (!syzygy(m, res, i + 1).length.is_finite()) return {};
  // dim R = 0: H^0_m(R) = R and Tor against the zero ring vanishes
  if (m.ring()->dimension() == 0) return {CheckStatus::Holds, 0};
  std::vector<Polynomial> gens(h0.begin(), h0.end());
  std::uint64_t t = tor_length(res, i, 0, Coefficients::quotient(std::move(gens)));
  return {t == 0 ? CheckStatus::Holds : CheckStatus::Violated, t};
}

bool SurveyReport::no_violations() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Violated) return false;
  return true;
}

SurveyReport syzygy_length_survey(const SubmodulePresentation& m, std::size_t i_max,
                                  const GroebnerOptions& options) {
  const RingPtr& ring = m.ring();
  const int d = ring->dimension();
  SurveyReport rep{d, m.length(), {}, {}};
  const bool finite_m = rep.module_length.is_finite();
  auto res = resolve(m, i_max, true, options);
  for (std::size_t j = 0; j <= i_max; ++j) {
    auto s = syzygy(m, res, j);
    rep.rows.push_back({j, res.betti[j], s.dimension, s.length});
  }
  bool infinite_pd = !m.is_zero();
  for (std::size_t j = 0; j <= i_max; ++j)
    if (res.betti[j] == 0) infinite_pd = false;
  const std::string hyp = finite_m ? "lambda(M) finite" : "lambda(M) infinite, hypothesis not met";

  for (std::size_t j = 1; j <= i_max; ++j) {
    const auto& row = rep.rows[j];
    bool law = row.dimension <= 0 || row.dimension == d;
    bool finite_iff = row.length.is_finite() == (row.dimension <= 0);
    CheckStatus st = law && finite_iff ? CheckStatus::Holds
                     : finite_m        ? CheckStatus::Violated
                                       : CheckStatus::Vacuous;
    rep.checks.push_back({"dimsyz", j, st, "dim " + std::to_string(row.dimension) + "; " + hyp});
  }

  {
    SurveyCheck c{"first_third_infinite", 3, CheckStatus::Vacuous, ""};
    if (d != 1) c.detail = "dim R is not 1";
    else if (!finite_m) c.detail = "lambda(M) infinite";
    else if (!infinite_pd) c.detail = "finite projective dimension";
    else if (i_max < 3) c.detail = "survey stops below index 3";
    else {
      bool ok = rep.rows[1].dimension == d && rep.rows[3].dimension == d;
      c.status = ok ? CheckStatus::Holds : CheckStatus::Violated;
      c.detail = "dims " + std::to_string(rep.rows[1].dimension) + ", " +
                 std::to_string(rep.rows[3].dimension);
    }
    rep.checks.push_back(std::move(c));
  }

  std::optional<std::vector<Polynomial>> h0;
  auto get_h0 = [&]() -> const std::vector<Polynomial>& {
    if (!h0) h0 = h0_ring(ring, options);
    return *h0;
  };

  for (std::size_t i = 1; i + 1 <= i_max; ++i) {
    SurveyCheck c{"one_dim", i, CheckStatus::Vacuous, ""};
    const auto& next = rep.rows[i + 1];
    if (d <= 0) c.detail = "dim R = 0";
    else if (!finite_m) c.detail = "lambda(M) infinite";
    else if (!infinite_pd) c.detail = "finite projective dimension";
    else if (!next.length.is_finite()) c.detail = "lambda(Omega_{i+1}) infinite";
    else if (rep.rows[i].betti < rep.rows[i - 1].betti) c.detail = "beta_i < beta_{i-1}";
    else {
      bool ok = rep.rows[i - 1].length.is_finite() && d == 1;
      c.status = ok ? CheckStatus::Holds : CheckStatus::Violated;
      c.detail = "lambda(Omega_{i-1}) = " + rep.rows[i - 1].length.to_string();
    }
    rep.checks.push_back(std::move(c));

    if (finite_m) {
      auto lem = lemma_h0_check(m, res, i, get_h0());
      std::string detail = lem.tor_length ? "tor length " + std::to_string(*lem.tor_length)
                                          : "lambda(Omega_{i+1}) infinite";
      rep.checks.push_back({"lemma_h0", i, lem.status, detail});
    }
  }

  if (d == 1 && finite_m) {
    auto flag = buchsbaum_flag(ring, options);
    for (std::size_t i = 2; i + 1 <= i_max; ++i) {
      SurveyCheck c{"buchsbaum_bound", i, CheckStatus::Vacuous, ""};
      if (flag == BuchsbaumFlag::Fails) c.detail = "m*H^0 != 0";
      else if (flag == BuchsbaumFlag::HoldsVacuously) c.detail = "H^0 = 0, bound not implied";
      else if (!rep.rows[i + 1].length.is_finite()) c.detail = "lambda(Omega_{i+1}) infinite";
      else {
        c.status = rep.rows[i - 1].betti == 0 ? CheckStatus::Holds : CheckStatus::Violated;
        c.detail = "beta_{i-1} = " + std::to_string(rep.rows[i - 1].betti);
      }
      rep.checks.push_back(std::move(c));
    }
  }
  return rep;
}

std::vector<std::vector<Polynomial>> minimal_primes_monomial(const RingPtr& ring,
                                                             std::span<const Polynomial> gens) {
  const std::size_t nv = ring->nvars();
  if (nv > 24) throw Error(ErrorKind::ResourceBound, "minimal_primes_monomial: too many variables");
  std::vector<std::uint32_t> supports;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_monomial()) throw Error(ErrorKind::NotMonomial, "generator is not a monomial");
    std::uint32_t s = 0;
    for (std::size_t v = 0; v < nv; ++v)
      if (g.lead_monomial()[v] > 0) s |= 1u << v;
    supports.push_back(s);
  }
  std::vector<std::uint32_t> covers;
  for (int size = 0; size <= static_cast<int>(nv); ++size)
    for (std::uint32_t mask = 0; mask < (1u << nv); ++mask) {
      if (std::popcount(mask) != size) continue;
      bool cover = true;
      for (auto s : supports)
        if ((s & mask) == 0) cover = false;
      if (!cover) continue;
      bool minimal = true;
      for (auto c : covers)
        if ((c & mask) == c) minimal = false;
      if (minimal) covers.push_back(mask);
    }
  std::vector<std::vector<Polynomial>> out;
  for (auto c : covers) {
    std::vector<Polynomial> prime;
    for (std::size_t v = 0; v < nv; ++v)
      if (c & (1u << v)) prime.push_back(ring->variable(v));
    out.push_back(std::move(prime));
  }
  return out;
}

std::string to_string(BuchsbaumFlag f) {
  switch (f) {
    case BuchsbaumFlag::Fails: return "fails";
    case BuchsbaumFlag::NecessaryConditionHolds: return "necessary_condition_holds";
    case BuchsbaumFlag::HoldsVacuously: return "holds_vacuously";
  }
  return "?";
}

BuchsbaumFlag buchsbaum_flag(const RingPtr& ring, const GroebnerOptions& options) {
  require_dimension_one(ring, "buchsbaum_flag");
  auto h0 = h0_ring(ring, options);
  if (h0.empty()) return BuchsbaumFlag::HoldsVacuously;
  for (const auto& h : h0)
    for (const auto& v : ring->variables())
      if (!ring->reduce(v * h).is_zero()) return BuchsbaumFlag::Fails;
  return BuchsbaumFlag::NecessaryConditionHolds;
}

DiagnosisReport diagnose(const SubmodulePresentation& m, std::size_t i,
                         std::optional<std::vector<std::vector<Polynomial>>> primes,
                         const SequenceOptions& options) {
  const RingPtr& ring = m.ring();
  require_dimension_one(ring, "diagnose");
  require_finite_length(m, "diagnose");
  if (!primes) primes = minimal_primes_monomial(ring, ring->ideal_generators());
  auto res = resolve(m, i + 2, true, options.groebner);
  auto h0 = h0_ring(ring, options.groebner);
  DiagnosisReport rep{i, entries_in_h0(res, i, h0),
                      prime_tor(res, i, *primes, options.emin, options.emax, options.groebner),
                      beta_sequence(m, i, options), false, std::nullopt};
  bool all_zero = true;
  for (const auto& p : rep.condition_iii) all_zero = all_zero && p.all_zero;
  const auto& est = rep.beta_estimate;
  if (rep.condition_i) {
    bool small = !est.levels.empty() && est.levels.back().normalized < Rational(1, 20);
    rep.consistent = all_zero && small;
  } else {
    bool large = est.estimate && *est.estimate > Rational(1, 10);
    rep.consistent = !all_zero && large;
  }
  if (i >= 1) rep.finite_pd = finite_pd_from(res, i, h0);
  return rep;
}

}  // namespace fb
