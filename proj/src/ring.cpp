#include "fb/ring.hpp"

#include <set>

#include "fb/error.hpp"
#include "fb/parse.hpp"

namespace fb {

RingPtr QuotientRing::make(std::uint64_t p, std::vector<std::string> vars,
                           std::span<const std::string> ideal_generators) {
  PrimeField field(p);
  if (vars.empty()) throw ParseError("ring needs at least one variable", 0, 0);
  std::vector<Polynomial> gens;
  for (const auto& text : ideal_generators) {
    for (const auto& v : vars)
      if (!is_identifier(v)) throw ParseError("invalid variable name '" + v + "'", 0, 0);
    gens.push_back(parse_polynomial(text, field, vars));
    if (!gens.back().is_homogeneous())
      throw Error(ErrorKind::NotHomogeneous, "ideal generator '" + text + "' is not homogeneous");
  }
  return make(field, std::move(vars), std::move(gens));
}

RingPtr QuotientRing::make(const PrimeField& field, std::vector<std::string> vars,
                           std::vector<Polynomial> ideal_generators) {
  if (vars.empty()) throw ParseError("ring needs at least one variable", 0, 0);
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!is_identifier(v)) throw ParseError("invalid variable name '" + v + "'", 0, 0);
    if (!seen.insert(v).second) throw ParseError("duplicate variable '" + v + "'", 0, 0);
  }
  std::vector<ModuleElement> gens;
  for (const auto& g : ideal_generators) {
    if (g.nvars() != vars.size())
      throw Error(ErrorKind::AmbientMismatch, "generator lives in a different polynomial ring");
    if (!g.is_homogeneous())
      throw Error(ErrorKind::NotHomogeneous,
                  "ideal generator '" + format_polynomial(g, vars) + "' is not homogeneous");
    if (!g.is_zero()) gens.push_back(ModuleElement(std::vector<Polynomial>{g}));
  }
  auto result = buchberger(field, vars.size(), {0}, {}, gens);
  if (result.basis.is_unit())
    throw Error(ErrorKind::UnitIdeal, "the ideal contains 1; the quotient is the zero ring");
  return RingPtr(new QuotientRing(field, std::move(vars), std::move(ideal_generators),
                                  std::move(result.basis)));
}

QuotientRing::QuotientRing(const PrimeField& field, std::vector<std::string> vars,
                           std::vector<Polynomial> generators, GroebnerBasis basis)
    : field_(field), vars_(std::move(vars)), generators_(std::move(generators)),
      basis_(std::move(basis)) {
  auto leads = basis_.leading_monomials();
  dimension_ = independent_set_dimension(vars_.size(), leads[0]);
}

std::vector<Polynomial> QuotientRing::variables() const {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < nvars(); ++i) out.push_back(variable(i));
  return out;
}

Polynomial QuotientRing::reduce(const Polynomial& f) const {
  if (basis_.size() == 0) return f;
  return basis_.normal_form(f);
}

ModuleElement QuotientRing::reduce(const ModuleElement& v) const {
  if (basis_.size() == 0) return v;
  ModuleElement r = v;
  for (std::size_t k = 0; k < r.rank(); ++k) r[k] = reduce(v[k]);
  return r;
}

Matrix QuotientRing::reduce(const Matrix& m) const {
  std::vector<ModuleElement> cols;
  for (const auto& c : m.columns()) cols.push_back(reduce(c));
  return Matrix(field_, nvars(), m.row_degrees(), m.col_degrees(), std::move(cols));
}

Polynomial QuotientRing::parse(std::string_view text, std::size_t line) const {
  return parse_polynomial(text, field_, vars_, line);
}

std::string QuotientRing::format(const Polynomial& f) const { return format_polynomial(f, vars_); }

std::string QuotientRing::format(const ModuleElement& v) const { return format_element(v, vars_); }

HilbertSeries QuotientRing::free_module_series(std::span<const Degree> row_degrees) const {
  HilbertSeries base{nvars(), hilbert_numerator(nvars(), basis_.leading_monomials()[0])};
  HilbertSeries total{nvars(), {}};
  for (Degree d : row_degrees) total += base.shifted(d);
  return total;
}

RingPtr QuotientRing::ambient() const { return make(field_, vars_, {}); }

RingPtr QuotientRing::quotient_by(std::span<const Polynomial> extra) const {
  std::vector<Polynomial> gens;
  for (const auto& g : basis_.elements()) gens.push_back(g[0]);
  for (const auto& g : extra) gens.push_back(g);
  return make(field_, vars_, std::move(gens));
}

ModuleElement QuotientRing::ideal_vector(std::size_t rank, std::size_t position,
                                         const Polynomial& g) const {
  ModuleElement v(field_, nvars(), rank);
  v[position] = g;
  return v;
}

std::vector<ModuleElement> QuotientRing::ideal_relations(std::size_t rank) const {
  std::vector<ModuleElement> out;
  for (std::size_t k = 0; k < rank; ++k)
    for (const auto& g : basis_.elements()) out.push_back(ideal_vector(rank, k, g[0]));
  return out;
}

}  // namespace fb
