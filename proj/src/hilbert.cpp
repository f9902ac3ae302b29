#include "fb/hilbert.hpp"

#include <algorithm>

#include "fb/error.hpp"

namespace fb {

std::uint64_t Length::value() const {
  if (infinite_) throw Error(ErrorKind::InfiniteLength, "module has infinite length");
  return value_;
}

namespace {

void add_into(TPolynomial& a, const TPolynomial& b, std::int64_t sign, Degree shift = 0) {
  for (const auto& [d, c] : b) {
    auto& slot = a[d + shift];
    slot += sign * c;
    if (slot == 0) a.erase(d + shift);
  }
}

TPolynomial multiply(const TPolynomial& a, const TPolynomial& b) {
  TPolynomial r;
  for (const auto& [da, ca] : a)
    for (const auto& [db, cb] : b) {
      auto& slot = r[da + db];
      slot += ca * cb;
    }
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

// Divides by (1 - t) when exact; returns false otherwise.
bool divide_one_minus_t(TPolynomial& f) {
  if (f.empty()) return true;
  // f = (1 - t) g  <=>  g_d = sum_{k <= d} f_k.
  TPolynomial g;
  std::int64_t running = 0;
  Degree lo = f.begin()->first, hi = f.rbegin()->first;
  for (Degree d = lo; d <= hi; ++d) {
    auto it = f.find(d);
    if (it != f.end()) running += it->second;
    if (d == hi) {
      if (running != 0) return false;
      break;
    }
    if (running != 0) g[d] = running;
  }
  f = std::move(g);
  return true;
}

TPolynomial numerator_rec(std::size_t nvars, std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {{0, 1}};
  if (gens.front().is_one()) return {};

  // Pure powers of distinct variables: a complete intersection.
  bool pure = std::all_of(gens.begin(), gens.end(), [](const Monomial& m) {
    std::size_t support = 0;
    for (Exponent e : m.exponents()) support += e != 0;
    return support == 1;
  });
  if (pure) {
    TPolynomial acc{{0, 1}};
    for (const auto& m : gens) acc = multiply(acc, {{0, 1}, {static_cast<Degree>(m.degree()), -1}});
    return acc;
  }

  // Pivot on the variable occurring in the most mixed generators.
  std::vector<std::size_t> count(nvars, 0);
  for (const auto& m : gens) {
    std::size_t support = 0;
    for (Exponent e : m.exponents()) support += e != 0;
    if (support < 2) continue;
    for (std::size_t i = 0; i < nvars; ++i) count[i] += m[i] != 0;
  }
  std::size_t pivot = static_cast<std::size_t>(
      std::max_element(count.begin(), count.end()) - count.begin());

  // N(L) = N(L + (x)) + t * N(L : x)
  std::vector<Monomial> with_pivot;
  std::vector<Monomial> colon;
  for (const auto& m : gens) {
    if (m[pivot] == 0) with_pivot.push_back(m);
    std::vector<Exponent> e(m.exponents().begin(), m.exponents().end());
    if (e[pivot] > 0) --e[pivot];
    colon.emplace_back(std::span<const Exponent>(e));
  }
  with_pivot.push_back(Monomial::variable(nvars, pivot));
  TPolynomial result = numerator_rec(nvars, std::move(with_pivot));
  add_into(result, numerator_rec(nvars, std::move(colon)), 1, 1);
  return result;
}

}  // namespace

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return compare_degrevlex(a, b) < 0; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool divisible = std::any_of(out.begin(), out.end(), [&](const Monomial& g) { return g.divides(m); });
    if (!divisible) out.push_back(m);
  }
  return out;
}

TPolynomial hilbert_numerator(std::size_t nvars, std::vector<Monomial> generators) {
  return numerator_rec(nvars, std::move(generators));
}

int independent_set_dimension(std::size_t nvars, std::span<const Monomial> generators) {
  std::vector<std::uint64_t> supports;
  for (const auto& m : generators) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (m[i] != 0) s |= std::uint64_t{1} << i;
    if (s == 0) return -1;
    supports.push_back(s);
  }
  if (nvars > 24) throw Error(ErrorKind::ResourceBound, "too many variables for subset search");
  int best = 0;
  for (std::uint64_t set = 0; set < (std::uint64_t{1} << nvars); ++set) {
    int size = __builtin_popcountll(set);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [&](std::uint64_t s) { return (s & ~set) == 0; });
    if (independent) best = size;
  }
  return best;
}

int HilbertSeries::dimension() const {
  if (numerator.empty()) return -1;
  TPolynomial f = numerator;
  int order = 0;
  while (order < static_cast<int>(nvars) && divide_one_minus_t(f)) {
    if (f.empty()) break;
    ++order;
  }
  return static_cast<int>(nvars) - order;
}

Length HilbertSeries::length() const {
  if (numerator.empty()) return Length::finite(0);
  TPolynomial f = numerator;
  for (std::size_t k = 0; k < nvars; ++k)
    if (!divide_one_minus_t(f)) return Length::infinite();
  std::int64_t total = 0;
  for (const auto& [d, c] : f) total += c;
  if (total < 0) throw Error(ErrorKind::LiftFailure, "negative length from Hilbert series");
  return Length::finite(static_cast<std::uint64_t>(total));
}

std::vector<std::int64_t> HilbertSeries::values(Degree lo, Degree hi) const {
  // Coefficient of t^d in N(t)/(1-t)^n is sum_k N_k * C(d - k + n - 1, n - 1).
  std::vector<std::int64_t> out;
  for (Degree d = lo; d <= hi; ++d) {
    std::int64_t v = 0;
    for (const auto& [k, c] : numerator) {
      Degree m = d - k;
      if (m < 0) continue;
      if (nvars == 0) {
        v += m == 0 ? c : 0;
        continue;
      }
      // binomial(m + n - 1, n - 1)
      std::int64_t b = 1;
      for (std::size_t j = 1; j < nvars; ++j) b = b * (m + static_cast<Degree>(j)) / static_cast<Degree>(j);
      v += c * b;
    }
    out.push_back(v);
  }
  return out;
}

HilbertSeries& HilbertSeries::operator+=(const HilbertSeries& other) {
  add_into(numerator, other.numerator, 1);
  return *this;
}

HilbertSeries& HilbertSeries::operator-=(const HilbertSeries& other) {
  add_into(numerator, other.numerator, -1);
  return *this;
}

HilbertSeries HilbertSeries::shifted(Degree by) const {
  HilbertSeries r{nvars, {}};
  add_into(r.numerator, numerator, 1, by);
  return r;
}

}  // namespace fb
