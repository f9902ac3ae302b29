#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fb/polynomial.hpp"

namespace fb {

// Element of a free module S^r, stored densely by component. Module terms
// are ordered position-over-term: a smaller component index is larger, and
// within one component degrevlex decides.
class ModuleElement {
 public:
  ModuleElement(const PrimeField& field, std::size_t nvars, std::size_t rank);
  explicit ModuleElement(std::vector<Polynomial> components);

  static ModuleElement basis_vector(const PrimeField& field, std::size_t nvars, std::size_t rank,
                                    std::size_t index);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t rank() const noexcept { return comps_.size(); }
  const Polynomial& operator[](std::size_t k) const { return comps_[k]; }
  Polynomial& operator[](std::size_t k) { return comps_[k]; }
  const std::vector<Polynomial>& components() const noexcept { return comps_; }

  bool is_zero() const noexcept;
  // Index of the first nonzero component; rank() when zero.
  std::size_t lead_position() const noexcept;
  const Term& lead() const { return comps_[lead_position()].lead(); }
  std::size_t term_count() const noexcept;

  // Degree of every term, shifted by the row degree of its component.
  // nullopt for the zero element or for an inhomogeneous element.
  std::optional<Degree> degree(std::span<const Degree> row_degrees) const;
  bool is_homogeneous(std::span<const Degree> row_degrees) const;

  ModuleElement add_multiple(const ModuleElement& other, Coeff c, const Monomial& m) const;
  ModuleElement scaled(Coeff c) const;
  ModuleElement times(const Polynomial& f) const;
  ModuleElement monic() const;

  friend ModuleElement operator+(const ModuleElement& a, const ModuleElement& b);
  friend ModuleElement operator-(const ModuleElement& a, const ModuleElement& b);
  friend bool operator==(const ModuleElement& a, const ModuleElement& b) {
    return a.comps_ == b.comps_;
  }

 private:
  PrimeField field_;
  std::size_t nvars_;
  std::vector<Polynomial> comps_;
};

// -1, 0, 1 comparison of module terms in position-over-term order.
int compare_pot(std::size_t pos_a, const Monomial& a, std::size_t pos_b, const Monomial& b) noexcept;

// Homogeneous matrix viewed as a map from a free module with `col_degrees`
// to one with `row_degrees`. Columns are stored as module elements.
class Matrix {
 public:
  Matrix(const PrimeField& field, std::size_t nvars, std::vector<Degree> row_degrees,
         std::vector<Degree> col_degrees, std::vector<ModuleElement> columns);
  // Column degrees inferred from the entries; zero columns get degree
  // `zero_column_degree` unless listed explicitly.
  static Matrix from_columns(const PrimeField& field, std::size_t nvars,
                             std::vector<Degree> row_degrees, std::vector<ModuleElement> columns);
  static Matrix from_rows(const PrimeField& field, std::size_t nvars,
                          const std::vector<std::vector<Polynomial>>& rows,
                          std::vector<Degree> row_degrees);
  static Matrix zero(const PrimeField& field, std::size_t nvars, std::vector<Degree> row_degrees,
                     std::vector<Degree> col_degrees);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t rows() const noexcept { return row_degrees_.size(); }
  std::size_t cols() const noexcept { return columns_.size(); }
  const std::vector<Degree>& row_degrees() const noexcept { return row_degrees_; }
  const std::vector<Degree>& col_degrees() const noexcept { return col_degrees_; }
  const std::vector<ModuleElement>& columns() const noexcept { return columns_; }
  const ModuleElement& column(std::size_t c) const { return columns_[c]; }
  const Polynomial& entry(std::size_t r, std::size_t c) const { return columns_[c][r]; }

  bool is_zero() const noexcept;
  Matrix transpose() const;
  // Matrix product this * other (other's rows must match this' columns).
  Matrix operator*(const Matrix& other) const;
  // Applies the matrix to a coefficient column.
  ModuleElement apply(const ModuleElement& coefficients) const;
  // Entries are homogeneous of degree col_degree - row_degree.
  bool is_homogeneous() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.row_degrees_ == b.row_degrees_ && a.col_degrees_ == b.col_degrees_ &&
           a.columns_ == b.columns_;
  }

 private:
  PrimeField field_;
  std::size_t nvars_;
  std::vector<Degree> row_degrees_;
  std::vector<Degree> col_degrees_;
  std::vector<ModuleElement> columns_;
};

std::string format_element(const ModuleElement& v, std::span<const std::string> names);

}  // namespace fb
