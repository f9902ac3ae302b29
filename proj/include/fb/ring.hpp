#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fb/groebner.hpp"
#include "fb/hilbert.hpp"

namespace fb {

class QuotientRing;
using RingPtr = std::shared_ptr<const QuotientRing>;

// R = F_p[x_1..x_n] / I for a homogeneous ideal I, with the reduced
// Groebner basis of I and the Krull dimension of R computed up front.
// Immutable after construction.
class QuotientRing {
 public:
  // Validating constructor: p prime, variable names distinct identifiers,
  // generators parse and are homogeneous, 1 not in I.
  static RingPtr make(std::uint64_t p, std::vector<std::string> vars,
                      std::span<const std::string> ideal_generators);
  static RingPtr make(const PrimeField& field, std::vector<std::string> vars,
                      std::vector<Polynomial> ideal_generators);

  const PrimeField& field() const noexcept { return field_; }
  Coeff characteristic() const noexcept { return field_.characteristic(); }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const std::vector<Polynomial>& ideal_generators() const noexcept { return generators_; }
  const GroebnerBasis& ideal_basis() const noexcept { return basis_; }
  int dimension() const noexcept { return dimension_; }
  bool is_polynomial_ring() const noexcept { return basis_.size() == 0; }

  Polynomial zero() const { return Polynomial(field_, nvars()); }
  Polynomial one() const { return Polynomial::constant(field_, nvars(), 1); }
  Polynomial variable(std::size_t i) const { return Polynomial::variable(field_, nvars(), i); }
  std::vector<Polynomial> variables() const;

  // Normal forms modulo I.
  Polynomial reduce(const Polynomial& f) const;
  ModuleElement reduce(const ModuleElement& v) const;
  Matrix reduce(const Matrix& m) const;

  Polynomial parse(std::string_view text, std::size_t line = 1) const;
  std::string format(const Polynomial& f) const;
  std::string format(const ModuleElement& v) const;

  // Hilbert series of the graded free module R^r with the given twists.
  HilbertSeries free_module_series(std::span<const Degree> row_degrees) const;

  // The polynomial ring S over the same variables.
  RingPtr ambient() const;
  // S / (I + extra); throws Error(UnitIdeal) if that is the zero ring.
  RingPtr quotient_by(std::span<const Polynomial> extra) const;

  // Generators of I homogeneous, I proper: the invariants make() checks.
  ModuleElement ideal_vector(std::size_t rank, std::size_t position, const Polynomial& g) const;
  // g * e_k for every basis element g of I and every position k < rank.
  std::vector<ModuleElement> ideal_relations(std::size_t rank) const;

 private:
  QuotientRing(const PrimeField& field, std::vector<std::string> vars,
               std::vector<Polynomial> generators, GroebnerBasis basis);

  PrimeField field_;
  std::vector<std::string> vars_;
  std::vector<Polynomial> generators_;
  GroebnerBasis basis_;
  int dimension_;
};

}  // namespace fb
