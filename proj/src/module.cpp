#include "fb/module.hpp"

#include "fb/error.hpp"

namespace fb {

ModuleElement::ModuleElement(const PrimeField& field, std::size_t nvars, std::size_t rank)
    : field_(field), nvars_(nvars), comps_(rank, Polynomial(field, nvars)) {}

ModuleElement::ModuleElement(std::vector<Polynomial> components)
    : field_(components.at(0).field()), nvars_(components.at(0).nvars()),
      comps_(std::move(components)) {}

ModuleElement ModuleElement::basis_vector(const PrimeField& field, std::size_t nvars,
                                          std::size_t rank, std::size_t index) {
  ModuleElement e(field, nvars, rank);
  e.comps_[index] = Polynomial::constant(field, nvars, 1);
  return e;
}

bool ModuleElement::is_zero() const noexcept {
  for (const auto& f : comps_)
    if (!f.is_zero()) return false;
  return true;
}

std::size_t ModuleElement::lead_position() const noexcept {
  for (std::size_t k = 0; k < comps_.size(); ++k)
    if (!comps_[k].is_zero()) return k;
  return comps_.size();
}

std::size_t ModuleElement::term_count() const noexcept {
  std::size_t n = 0;
  for (const auto& f : comps_) n += f.size();
  return n;
}

std::optional<Degree> ModuleElement::degree(std::span<const Degree> row_degrees) const {
  std::optional<Degree> d;
  for (std::size_t k = 0; k < comps_.size(); ++k) {
    for (const auto& t : comps_[k].terms()) {
      Degree td = static_cast<Degree>(t.mono.degree()) + row_degrees[k];
      if (!d) d = td;
      else if (*d != td) return std::nullopt;
    }
  }
  return d;
}

bool ModuleElement::is_homogeneous(std::span<const Degree> row_degrees) const {
  return is_zero() || degree(row_degrees).has_value();
}

ModuleElement ModuleElement::add_multiple(const ModuleElement& other, Coeff c,
                                          const Monomial& m) const {
  if (other.rank() != rank()) throw Error(ErrorKind::AmbientMismatch, "module rank mismatch");
  ModuleElement r = *this;
  for (std::size_t k = 0; k < comps_.size(); ++k)
    if (!other.comps_[k].is_zero()) r.comps_[k] = comps_[k].add_multiple(other.comps_[k], c, m);
  return r;
}

ModuleElement ModuleElement::scaled(Coeff c) const {
  ModuleElement r = *this;
  for (auto& f : r.comps_) f = f.scaled(c);
  return r;
}

ModuleElement ModuleElement::times(const Polynomial& f) const {
  ModuleElement r = *this;
  for (auto& g : r.comps_) g = g * f;
  return r;
}

ModuleElement ModuleElement::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(lead().coeff));
}

ModuleElement operator+(const ModuleElement& a, const ModuleElement& b) {
  return a.add_multiple(b, 1, Monomial(a.nvars_));
}

ModuleElement operator-(const ModuleElement& a, const ModuleElement& b) {
  return a.add_multiple(b, a.field_.neg(1), Monomial(a.nvars_));
}

int compare_pot(std::size_t pos_a, const Monomial& a, std::size_t pos_b,
                const Monomial& b) noexcept {
  if (pos_a != pos_b) return pos_a < pos_b ? 1 : -1;
  return compare_degrevlex(a, b);
}

Matrix::Matrix(const PrimeField& field, std::size_t nvars, std::vector<Degree> row_degrees,
               std::vector<Degree> col_degrees, std::vector<ModuleElement> columns)
    : field_(field), nvars_(nvars), row_degrees_(std::move(row_degrees)),
      col_degrees_(std::move(col_degrees)), columns_(std::move(columns)) {
  if (col_degrees_.size() != columns_.size())
    throw Error(ErrorKind::AmbientMismatch, "column degree count differs from column count");
  for (const auto& c : columns_)
    if (c.rank() != row_degrees_.size())
      throw Error(ErrorKind::AmbientMismatch, "column rank differs from row count");
}

Matrix Matrix::from_columns(const PrimeField& field, std::size_t nvars,
                            std::vector<Degree> row_degrees, std::vector<ModuleElement> columns) {
  std::vector<Degree> col_degrees;
  for (const auto& c : columns) {
    if (!c.is_homogeneous(row_degrees))
      throw Error(ErrorKind::NotHomogeneous, "matrix column is not homogeneous");
    col_degrees.push_back(c.degree(row_degrees).value_or(0));
  }
  return Matrix(field, nvars, std::move(row_degrees), std::move(col_degrees), std::move(columns));
}

Matrix Matrix::from_rows(const PrimeField& field, std::size_t nvars,
                         const std::vector<std::vector<Polynomial>>& rows,
                         std::vector<Degree> row_degrees) {
  std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  std::vector<ModuleElement> columns;
  for (std::size_t c = 0; c < ncols; ++c) {
    ModuleElement col(field, nvars, rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != ncols)
        throw Error(ErrorKind::AmbientMismatch, "matrix rows have different lengths");
      col[r] = rows[r][c];
    }
    columns.push_back(std::move(col));
  }
  return from_columns(field, nvars, std::move(row_degrees), std::move(columns));
}

Matrix Matrix::zero(const PrimeField& field, std::size_t nvars, std::vector<Degree> row_degrees,
                    std::vector<Degree> col_degrees) {
  std::vector<ModuleElement> columns(col_degrees.size(),
                                     ModuleElement(field, nvars, row_degrees.size()));
  return Matrix(field, nvars, std::move(row_degrees), std::move(col_degrees), std::move(columns));
}

bool Matrix::is_zero() const noexcept {
  for (const auto& c : columns_)
    if (!c.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  std::vector<Degree> rows, cols;
  for (Degree d : col_degrees_) rows.push_back(-d);
  for (Degree d : row_degrees_) cols.push_back(-d);
  std::vector<ModuleElement> columns;
  for (std::size_t r = 0; r < row_degrees_.size(); ++r) {
    ModuleElement col(field_, nvars_, columns_.size());
    for (std::size_t c = 0; c < columns_.size(); ++c) col[c] = columns_[c][r];
    columns.push_back(std::move(col));
  }
  return Matrix(field_, nvars_, std::move(rows), std::move(cols), std::move(columns));
}

ModuleElement Matrix::apply(const ModuleElement& coefficients) const {
  if (coefficients.rank() != cols())
    throw Error(ErrorKind::AmbientMismatch, "coefficient column has wrong length");
  ModuleElement out(field_, nvars_, rows());
  for (std::size_t c = 0; c < cols(); ++c) {
    if (coefficients[c].is_zero()) continue;
    out = out + columns_[c].times(coefficients[c]);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (other.rows() != cols()) throw Error(ErrorKind::AmbientMismatch, "matrix shapes differ");
  std::vector<ModuleElement> columns;
  for (const auto& c : other.columns()) columns.push_back(apply(c));
  return Matrix(field_, nvars_, row_degrees_, other.col_degrees_, std::move(columns));
}

bool Matrix::is_homogeneous() const {
  for (std::size_t c = 0; c < cols(); ++c) {
    if (!columns_[c].is_homogeneous(row_degrees_)) return false;
    auto d = columns_[c].degree(row_degrees_);
    if (d && *d != col_degrees_[c]) return false;
  }
  return true;
}

std::string format_element(const ModuleElement& v, std::span<const std::string> names) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.rank(); ++k) {
    if (k) out += ", ";
    out += format_polynomial(v[k], names);
  }
  return out + ")";
}

}  // namespace fb
