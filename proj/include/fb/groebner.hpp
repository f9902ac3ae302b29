#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fb/module.hpp"

namespace fb {

struct GroebnerOptions {
  // Hard cap on the number of basis elements; exceeding it throws
  // Error(ResourceBound).
  std::size_t max_basis_size = 100000;
};

// Reduced Groebner basis of a submodule of a graded free module S^r over
// S = F_p[x_1..x_n], for degrevlex extended position-over-term.
class GroebnerBasis {
 public:
  GroebnerBasis(const PrimeField& field, std::size_t nvars, std::vector<Degree> row_degrees,
                std::vector<ModuleElement> elements);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t rank() const noexcept { return row_degrees_.size(); }
  const std::vector<Degree>& row_degrees() const noexcept { return row_degrees_; }
  const std::vector<ModuleElement>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool is_unit() const;  // contains a basis vector of every position

  // Fully reduced remainder; no term of the result is divisible by a
  // leading term in the same position.
  ModuleElement normal_form(const ModuleElement& v) const;
  Polynomial normal_form(const Polynomial& f) const;  // rank-1 bases only
  bool contains(const ModuleElement& v) const { return normal_form(v).is_zero(); }

  // Minimal generators of the leading-term module, one list per position.
  std::vector<std::vector<Monomial>> leading_monomials() const;

  // Every S-pair of elements with equal leading position reduces to zero.
  bool satisfies_buchberger_criterion() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.row_degrees_ == b.row_degrees_ && a.elements_ == b.elements_;
  }

 private:
  PrimeField field_;
  std::size_t nvars_;
  std::vector<Degree> row_degrees_;
  std::vector<ModuleElement> elements_;
  std::vector<std::vector<std::size_t>> by_position_;
};

struct BuchbergerResult {
  GroebnerBasis basis;
  // Indices into `generators` that were not in the span of everything
  // processed before them (lower degree first, `fixed` before
  // `generators` within a degree). For homogeneous input these form a
  // minimal generating set of span(generators) modulo span(fixed).
  std::vector<std::size_t> minimal_generators;
};

// Homogeneous Buchberger algorithm with the normal selection strategy and
// Gebauer-Moeller pair criteria. All inputs must be homogeneous w.r.t.
// `row_degrees` (throws Error(NotHomogeneous) otherwise).
BuchbergerResult buchberger(const PrimeField& field, std::size_t nvars,
                            std::vector<Degree> row_degrees,
                            std::span<const ModuleElement> fixed,
                            std::span<const ModuleElement> generators,
                            const GroebnerOptions& options = {});

// S-polynomial of two elements with equal leading position.
ModuleElement s_polynomial(const ModuleElement& f, const ModuleElement& g);

}  // namespace fb
