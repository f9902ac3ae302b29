#include "fb/resolution.hpp"

#include "fb/error.hpp"

namespace fb {

namespace {

bool is_unit_entry(const Polynomial& f) { return !f.is_zero() && f.is_constant(); }

std::optional<std::pair<std::size_t, std::size_t>> find_unit(const Matrix& a) {
  for (std::size_t c = 0; c < a.cols(); ++c)
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (is_unit_entry(a.entry(r, c))) return std::make_pair(r, c);
  return std::nullopt;
}

template <class T>
std::vector<T> erase_at(std::vector<T> v, std::size_t i) {
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
  return v;
}

Matrix delete_row(const Matrix& a, std::size_t r) {
  std::vector<ModuleElement> cols;
  for (const auto& c : a.columns()) {
    ModuleElement v(a.field(), a.nvars(), a.rows() - 1);
    for (std::size_t k = 0, t = 0; k < a.rows(); ++k)
      if (k != r) v[t++] = c[k];
    cols.push_back(std::move(v));
  }
  return Matrix(a.field(), a.nvars(), erase_at(a.row_degrees(), r), a.col_degrees(), std::move(cols));
}

Matrix delete_column(const Matrix& a, std::size_t c) {
  return Matrix(a.field(), a.nvars(), a.row_degrees(), erase_at(a.col_degrees(), c),
                erase_at(a.columns(), c));
}

// a - col_c * u^{-1} * row_r, then row r and column c removed.
Matrix split_unit(const RingPtr& ring, const Matrix& a, std::size_t r, std::size_t c) {
  const PrimeField& f = a.field();
  Coeff inv = f.inv(a.entry(r, c).constant_term());
  const ModuleElement& pivot = a.column(c);
  std::vector<ModuleElement> cols;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (j == c) continue;
    ModuleElement v = a.column(j);
    const Polynomial& coef = a.entry(r, j);
    if (!coef.is_zero()) v = v - pivot.times(coef.scaled(inv));
    cols.push_back(ring->reduce(v));
  }
  Matrix out(f, a.nvars(), a.row_degrees(), erase_at(a.col_degrees(), c), std::move(cols));
  return delete_row(out, r);
}

std::vector<ModuleElement> nonzero_columns(const Matrix& a) {
  std::vector<ModuleElement> out;
  for (const auto& c : a.columns())
    if (!c.is_zero()) out.push_back(c);
  return out;
}

}  // namespace

FreeComplex::FreeComplex(RingPtr ring, std::vector<std::vector<Degree>> degrees,
                         std::vector<Matrix> maps)
    : ring_(std::move(ring)), degrees_(std::move(degrees)), maps_(std::move(maps)) {
  if (degrees_.size() != maps_.size() + 1)
    throw Error(ErrorKind::AmbientMismatch, "complex needs one more module than maps");
  for (std::size_t j = 1; j <= maps_.size(); ++j)
    if (maps_[j - 1].row_degrees() != degrees_[j - 1] || maps_[j - 1].col_degrees() != degrees_[j])
      throw Error(ErrorKind::AmbientMismatch, "complex map shapes do not chain");
}

bool FreeComplex::is_complex() const {
  for (std::size_t j = 1; j < maps_.size(); ++j)
    if (!ring_->reduce(map(j) * map(j + 1)).is_zero()) return false;
  return true;
}

bool FreeComplex::is_minimal() const {
  for (const auto& m : maps_)
    if (find_unit(ring_->reduce(m))) return false;
  return true;
}

Matrix minimal_presentation(const SubmodulePresentation& m, const GroebnerOptions& options) {
  const RingPtr& ring = m.ring();
  Matrix a = ring->reduce(m.generators());
  for (;;) {
    a = minimal_generators(ring, a.row_degrees(), nonzero_columns(a), options);
    auto unit = find_unit(a);
    if (!unit) return a;
    a = split_unit(ring, a, unit->first, unit->second);
  }
}

FreeComplex minimize(const FreeComplex& c) {
  const RingPtr& ring = c.ring();
  std::vector<std::vector<Degree>> degrees;
  for (std::size_t j = 0; j <= c.length(); ++j) degrees.push_back(c.degrees(j));
  std::vector<Matrix> maps;
  for (const auto& m : c.maps()) maps.push_back(ring->reduce(m));
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t j = 1; j <= maps.size() && !changed; ++j) {
      auto unit = find_unit(maps[j - 1]);
      if (!unit) continue;
      auto [r, col] = *unit;
      maps[j - 1] = split_unit(ring, maps[j - 1], r, col);
      degrees[j - 1] = erase_at(degrees[j - 1], r);
      degrees[j] = erase_at(degrees[j], col);
      if (j < maps.size()) maps[j] = delete_row(maps[j], col);
      if (j > 1) maps[j - 2] = delete_column(maps[j - 2], r);
      changed = true;
    }
  }
  return FreeComplex(ring, std::move(degrees), std::move(maps));
}

MinimalResolution resolve(const SubmodulePresentation& m, std::size_t steps, bool minimal,
                          const GroebnerOptions& options) {
  if (m.mode() != PresentationMode::Cokernel)
    throw Error(ErrorKind::AmbientMismatch, "resolve expects a cokernel presentation");
  const RingPtr& ring = m.ring();
  std::vector<std::vector<Degree>> degrees;
  std::vector<Matrix> maps;
  std::size_t total = minimal ? steps : steps + 1;
  Matrix first = minimal ? minimal_presentation(m, options) : ring->reduce(m.generators());
  if (!minimal)
    first = Matrix::from_columns(ring->field(), ring->nvars(), first.row_degrees(), nonzero_columns(first));
  degrees.push_back(first.row_degrees());
  if (total >= 1) {
    maps.push_back(first);
    degrees.push_back(first.col_degrees());
  }
  for (std::size_t j = 2; j <= total; ++j) {
    const Matrix& prev = maps.back();
    Matrix next = minimal ? kernel_over_quotient(prev, ring, options)
                          : syzygy_generators(prev, ring, options);
    degrees.push_back(next.col_degrees());
    maps.push_back(std::move(next));
  }
  FreeComplex complex(ring, std::move(degrees), std::move(maps));
  if (!minimal) {
    FreeComplex reduced = minimize(complex);
    std::vector<std::vector<Degree>> d;
    std::vector<Matrix> mp;
    for (std::size_t j = 0; j <= steps; ++j) d.push_back(reduced.degrees(j));
    for (std::size_t j = 1; j <= steps; ++j) mp.push_back(reduced.map(j));
    complex = FreeComplex(ring, std::move(d), std::move(mp));
  }
  MinimalResolution res{std::move(complex), minimal, {}};
  for (std::size_t j = 0; j <= steps; ++j) res.betti.push_back(res.complex.rank(j));
  res.minimal = res.complex.is_minimal();
  return res;
}

bool is_exact_at(const FreeComplex& c, std::size_t j, const GroebnerOptions& options) {
  Matrix kernel = kernel_over_quotient(c.map(j), c.ring(), options);
  SubmodulePresentation a(c.ring(), kernel, PresentationMode::Submodule, options);
  SubmodulePresentation b(c.ring(), c.map(j + 1), PresentationMode::Submodule, options);
  return a.same_span(b);
}

SyzygyPresentation syzygy(const SubmodulePresentation& m, const MinimalResolution& res, std::size_t i) {
  if (i == 0) return {0, m, m.length(), m.dimension()};
  if (i > res.complex.length())
    throw Error(ErrorKind::AmbientMismatch, "syzygy index beyond the computed resolution");
  SubmodulePresentation omega(res.complex.ring(), res.complex.map(i), PresentationMode::Submodule);
  Length len = omega.length();
  int dim = omega.dimension();
  return {i, std::move(omega), len, dim};
}

SyzygyPresentation syzygy(const SubmodulePresentation& m, std::size_t i, const GroebnerOptions& options) {
  return syzygy(m, resolve(m, i, true, options), i);
}

}  // namespace fb
