#include "fb/frobenius.hpp"

#include <limits>

#include "fb/error.hpp"

namespace fb {

BracketLevel::BracketLevel(std::uint64_t p, unsigned e) : e_(e), q_(1) {
  for (unsigned k = 0; k < e; ++k) {
    q_ *= p;
    if (q_ > std::numeric_limits<std::uint32_t>::max())
      throw Error(ErrorKind::Overflow, "p^e exceeds the supported exponent width");
  }
}

Polynomial frobenius_power(const Polynomial& f, const BracketLevel& level) {
  if (level.q() == 1) return f;
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.coeff, t.mono.scaled(level.q())});
  // scaling preserves the degrevlex order, so the terms stay sorted
  return Polynomial::from_terms(f.field(), f.nvars(), std::move(terms));
}

std::vector<Polynomial> bracket_ideal(std::span<const Polynomial> gens, const BracketLevel& level) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) out.push_back(frobenius_power(g, level));
  return out;
}

Matrix bracket_matrix(const Matrix& a, const BracketLevel& level) {
  const auto q = static_cast<Degree>(level.q());
  std::vector<Degree> rows, cols;
  for (Degree d : a.row_degrees()) rows.push_back(d * q);
  for (Degree d : a.col_degrees()) cols.push_back(d * q);
  std::vector<ModuleElement> columns;
  for (const auto& c : a.columns()) {
    ModuleElement v(a.field(), a.nvars(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) v[r] = frobenius_power(c[r], level);
    columns.push_back(std::move(v));
  }
  return Matrix(a.field(), a.nvars(), std::move(rows), std::move(cols), std::move(columns));
}

FreeComplex twist_complex(const FreeComplex& g, const BracketLevel& level) {
  const auto q = static_cast<Degree>(level.q());
  std::vector<std::vector<Degree>> degrees;
  for (std::size_t j = 0; j <= g.length(); ++j) {
    std::vector<Degree> d = g.degrees(j);
    for (auto& v : d) v *= q;
    degrees.push_back(std::move(d));
  }
  std::vector<Matrix> maps;
  for (const auto& m : g.maps()) maps.push_back(g.ring()->reduce(bracket_matrix(m, level)));
  return FreeComplex(g.ring(), std::move(degrees), std::move(maps));
}

}  // namespace fb
