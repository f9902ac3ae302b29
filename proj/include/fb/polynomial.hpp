#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fb/field.hpp"
#include "fb/monomial.hpp"

namespace fb {

struct Term {
  Coeff coeff;
  Monomial mono;

  bool operator==(const Term&) const = default;
};

// Sparse polynomial over F_p. Terms are kept sorted strictly descending in
// degrevlex, with no zero coefficients and no repeated monomials.
class Polynomial {
 public:
  Polynomial(const PrimeField& field, std::size_t nvars) : field_(field), nvars_(nvars) {}

  static Polynomial constant(const PrimeField& field, std::size_t nvars, Coeff c);
  static Polynomial monomial(const PrimeField& field, Coeff c, Monomial m);
  static Polynomial variable(const PrimeField& field, std::size_t nvars, std::size_t index);
  // Sorts, merges repeated monomials and drops zero coefficients.
  static Polynomial from_terms(const PrimeField& field, std::size_t nvars, std::vector<Term> terms);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term& lead() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().mono; }
  Coeff lead_coeff() const { return terms_.front().coeff; }

  // Degree shared by all terms, or nullopt when inhomogeneous. The zero
  // polynomial is homogeneous of every degree; reported as nullopt too.
  std::optional<std::uint64_t> homogeneous_degree() const;
  bool is_homogeneous() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  Coeff constant_term() const;

  Polynomial scaled(Coeff c) const;
  Polynomial times_term(Coeff c, const Monomial& m) const;
  // this + c * m * other, in one merge pass.
  Polynomial add_multiple(const Polynomial& other, Coeff c, const Monomial& m) const;
  Polynomial pow(std::uint64_t k) const;
  Polynomial monic() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  PrimeField field_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

// Canonical text: coefficients in [0, p), terms descending, e.g. "x^2+4*y^2".
std::string format_polynomial(const Polynomial& f, std::span<const std::string> names);

}  // namespace fb
