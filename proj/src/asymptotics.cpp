#include "fb/asymptotics.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "fb/error.hpp"

namespace fb {

namespace {

std::int64_t checked_power(std::uint64_t q, int d) {
  std::int64_t out = 1;
  for (int k = 0; k < d; ++k)
    if (__builtin_mul_overflow(out, static_cast<std::int64_t>(q), &out))
      throw Error(ErrorKind::Overflow, "q^d exceeds 64 bits");
  return out;
}

// Runs fn(0..n-1) on at most `threads` workers; rethrows the first error.
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& fn) {
  threads = std::max<std::size_t>(1, std::min(threads, n));
  if (threads == 1) {
    for (std::size_t k = 0; k < n; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t k; (k = next++) < n;) {
        try {
          fn(k);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<std::pair<unsigned, std::uint64_t>> collect(
    const SequenceOptions& options, const std::function<std::uint64_t(unsigned)>& level) {
  if (options.emin > options.emax) throw Error(ErrorKind::Parse, "empty range of Frobenius levels");
  std::size_t n = options.emax - options.emin + 1;
  std::vector<std::pair<unsigned, std::uint64_t>> raw(n);
  parallel_for(n, options.threads, [&](std::size_t k) {
    unsigned e = options.emin + static_cast<unsigned>(k);
    raw[k] = {e, level(e)};
  });
  return raw;
}

}  // namespace

std::string to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::HilbertKunz: return "hk";
    case SequenceKind::Beta: return "beta";
    case SequenceKind::Mu: return "mu";
  }
  return "?";
}

std::vector<Rational> AsymptoticEstimate::differences() const {
  std::vector<Rational> out;
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    if (d == 0) {
      out.emplace_back(static_cast<std::int64_t>(levels[k + 1].raw));
      continue;
    }
    std::int64_t num = static_cast<std::int64_t>(levels[k + 1].raw) - static_cast<std::int64_t>(levels[k].raw);
    std::int64_t den = checked_power(levels[k + 1].q, d) - checked_power(levels[k].q, d);
    out.emplace_back(num, den);
  }
  return out;
}

AsymptoticEstimate estimate_from_levels(SequenceKind kind, std::size_t index, int d,
                                        std::vector<std::pair<unsigned, std::uint64_t>> raw,
                                        std::uint64_t p) {
  std::sort(raw.begin(), raw.end());
  AsymptoticEstimate out{kind, index, d, {}, std::nullopt, false};
  for (const auto& [e, value] : raw) {
    BracketLevel level(p, e);
    out.levels.push_back({e, level.q(), value,
                          Rational(static_cast<std::int64_t>(value), checked_power(level.q(), d))});
  }
  auto diffs = out.differences();
  if (!diffs.empty()) out.estimate = diffs.back();
  out.stabilized = diffs.size() >= 2 && diffs[diffs.size() - 1] == diffs[diffs.size() - 2];
  return out;
}

AsymptoticEstimate hk_sequence(const RingPtr& ring, std::span<const Polynomial> j,
                               const SequenceOptions& options) {
  if (SubmodulePresentation::quotient_ring_module(ring, j).dimension() > 0)
    throw Error(ErrorKind::NotPrimary, "ideal is not primary to the irrelevant ideal");
  std::vector<Polynomial> gens(j.begin(), j.end());
  auto raw = collect(options, [&](unsigned e) {
    auto bracket = bracket_ideal(gens, BracketLevel(ring->characteristic(), e));
    std::vector<ModuleElement> cols;
    for (const auto& g : bracket) cols.push_back(ModuleElement(std::vector<Polynomial>{g}));
    Matrix m = Matrix::from_columns(ring->field(), ring->nvars(), {0}, std::move(cols));
    return SubmodulePresentation(ring, std::move(m), PresentationMode::Cokernel, options.groebner)
        .length()
        .value();
  });
  return estimate_from_levels(SequenceKind::HilbertKunz, 0, ring->dimension(), std::move(raw),
                              ring->characteristic());
}

AsymptoticEstimate beta_sequence(const SubmodulePresentation& m, std::size_t i,
                                  const SequenceOptions& options, const Coefficients& n) {
  if (m.dimension() > 0) throw Error(ErrorKind::InfiniteLength, "module has positive dimension");
  MinimalResolution res = resolve(m, i + 1, true, options.groebner);
  auto raw = collect(options, [&](unsigned e) { return tor_length(res, i, e, n, options.groebner); });
  const RingPtr& ring = m.ring();
  return estimate_from_levels(SequenceKind::Beta, i, ring->dimension(), std::move(raw),
                              ring->characteristic());
}

AsymptoticEstimate mu_sequence(const SubmodulePresentation& m, std::size_t i,
                               const SequenceOptions& options) {
  if (m.dimension() > 0) throw Error(ErrorKind::InfiniteLength, "module has positive dimension");
  MinimalResolution res = resolve(m, i + 1, true, options.groebner);
  auto raw = collect(options, [&](unsigned e) { return ext_length(res, i, e, options.groebner); });
  const RingPtr& ring = m.ring();
  return estimate_from_levels(SequenceKind::Mu, i, ring->dimension(), std::move(raw),
                              ring->characteristic());
}

bool LawReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const LawCheck& c) { return c.passed; });
}

namespace {

Rational value_of(const AsymptoticEstimate& a) { return a.estimate.value_or(Rational(0)); }

Rational abs_diff(const Rational& a, const Rational& b) { return a > b ? a - b : b - a; }

LawCheck compare(std::string law, std::size_t index, const AsymptoticEstimate& a,
                 const AsymptoticEstimate& b, const Rational& tol) {
  Rational lhs = value_of(a), rhs = value_of(b);
  bool exact = a.stabilized && b.stabilized && lhs == rhs;
  return {std::move(law), index, lhs, rhs, exact, abs_diff(lhs, rhs) <= tol};
}

}  // namespace

LawReport verify_laws(const SubmodulePresentation& m, const LawOptions& options) {
  if (options.additivity && !options.primes)
    throw Error(ErrorKind::MissingMultiplicities, "additivity needs minimal primes with multiplicities");
  LawReport report;
  const RingPtr& ring = m.ring();
  const auto d = static_cast<std::size_t>(ring->dimension());
  const auto& seq = options.sequence;

  for (std::size_t i = 0; i < d; ++i) {
    auto mu = mu_sequence(m, i, seq);
    Rational v = value_of(mu);
    report.checks.push_back({"bass", i, v, Rational(0), mu.stabilized && v == Rational(0), v <= options.tolerance});
  }
  std::vector<AsymptoticEstimate> betas;
  for (std::size_t i = 0; i <= options.max_index; ++i) betas.push_back(beta_sequence(m, i, seq));
  for (std::size_t i = 0; i <= options.max_index; ++i)
    report.checks.push_back(compare("duality", i, betas[i], mu_sequence(m, d + i, seq), options.tolerance));

  if (options.additivity) {
    for (std::size_t i = 0; i <= options.max_index; ++i) {
      AsymptoticEstimate sum = betas[i];
      std::vector<std::pair<unsigned, std::uint64_t>> raw;
      for (const auto& l : betas[i].levels) raw.emplace_back(l.e, 0);
      for (const auto& prime : *options.primes) {
        auto part = beta_sequence(m, i, seq, Coefficients::quotient(prime.generators));
        for (std::size_t k = 0; k < raw.size(); ++k) raw[k].second += part.levels[k].raw * prime.multiplicity;
      }
      auto combined = estimate_from_levels(SequenceKind::Beta, i, static_cast<int>(d), std::move(raw),
                                           ring->characteristic());
      report.checks.push_back(compare("additivity", i, betas[i], combined, options.tolerance));
    }
  }

  if (options.nonzerodivisor) {
    RingPtr quotient = ring->quotient_by(std::vector<Polynomial>{*options.nonzerodivisor});
    SubmodulePresentation mbar(quotient, quotient->reduce(m.generators()), PresentationMode::Cokernel);
    for (std::size_t i = 0; i <= options.max_index; ++i) {
      auto over = beta_sequence(mbar, i, seq);
      Rational lhs = value_of(betas[i]), rhs = value_of(over);
      report.checks.push_back({"nonzerodivisor", i, lhs, rhs, false, lhs <= rhs + options.tolerance});
    }
  }
  return report;
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace fb
