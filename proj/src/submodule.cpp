#include "fb/submodule.hpp"

#include <algorithm>

#include "fb/error.hpp"

namespace fb {

namespace {

HilbertSeries quotient_series(const GroebnerBasis& gb) {
  auto leads = gb.leading_monomials();
  HilbertSeries total{gb.nvars(), {}};
  for (std::size_t k = 0; k < gb.rank(); ++k) {
    HilbertSeries part{gb.nvars(), hilbert_numerator(gb.nvars(), leads[k])};
    total += part.shifted(gb.row_degrees()[k]);
  }
  return total;
}

// Augmented element (top, e_j) of rank rows + cols.
ModuleElement augment(const ModuleElement& top, std::size_t cols, std::size_t j) {
  std::vector<Polynomial> comps = top.components();
  for (std::size_t k = 0; k < cols; ++k)
    comps.push_back(k == j ? Polynomial::constant(top.field(), top.nvars(), 1)
                           : Polynomial(top.field(), top.nvars()));
  return ModuleElement(std::move(comps));
}

ModuleElement pad(const ModuleElement& top, std::size_t cols) {
  std::vector<Polynomial> comps = top.components();
  for (std::size_t k = 0; k < cols; ++k) comps.emplace_back(top.field(), top.nvars());
  return ModuleElement(std::move(comps));
}

ModuleElement bottom_part(const ModuleElement& v, std::size_t rows) {
  std::vector<Polynomial> comps(v.components().begin() + static_cast<std::ptrdiff_t>(rows),
                                v.components().end());
  if (comps.empty()) return ModuleElement(v.field(), v.nvars(), 0);
  return ModuleElement(std::move(comps));
}

std::vector<Degree> concat(const std::vector<Degree>& a, const std::vector<Degree>& b) {
  std::vector<Degree> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

GroebnerBasis elimination_basis(const RingPtr& ring, const Matrix& a,
                                std::span<const ModuleElement> target,
                                const GroebnerOptions& options) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<ModuleElement> gens;
  for (std::size_t j = 0; j < cols; ++j) gens.push_back(augment(a.column(j), cols, j));
  std::vector<ModuleElement> fixed;
  for (const auto& t : target) fixed.push_back(pad(t, cols));
  for (const auto& r : ring->ideal_relations(rows)) fixed.push_back(pad(r, cols));
  return buchberger(ring->field(), ring->nvars(), concat(a.row_degrees(), a.col_degrees()), fixed,
                    gens, options)
      .basis;
}

Matrix eliminated_part(const RingPtr& ring, const GroebnerBasis& gb, std::size_t rows,
                       const std::vector<Degree>& col_degrees) {
  std::vector<ModuleElement> out;
  for (const auto& g : gb.elements()) {
    if (g.lead_position() < rows) continue;
    ModuleElement c = ring->reduce(bottom_part(g, rows));
    if (!c.is_zero()) out.push_back(std::move(c));
  }
  return Matrix::from_columns(ring->field(), ring->nvars(), col_degrees, std::move(out));
}

bool generator_less(const ModuleElement& a, const ModuleElement& b,
                    std::span<const Degree> row_degrees) {
  Degree da = a.degree(row_degrees).value_or(0), db = b.degree(row_degrees).value_or(0);
  if (da != db) return da < db;
  return compare_pot(a.lead_position(), a.lead().mono, b.lead_position(), b.lead().mono) > 0;
}

}  // namespace

SubmodulePresentation::SubmodulePresentation(RingPtr ring, Matrix generators,
                                             PresentationMode mode, const GroebnerOptions& options)
    : ring_(std::move(ring)), generators_(std::move(generators)), mode_(mode),
      basis_(groebner_basis(generators_.columns(), generators_.row_degrees(), *ring_, true, options)) {
}

SubmodulePresentation SubmodulePresentation::quotient_ring_module(RingPtr ring,
                                                                  std::span<const Polynomial> ideal) {
  std::vector<ModuleElement> cols;
  for (const auto& g : ideal) cols.push_back(ModuleElement(std::vector<Polynomial>{g}));
  Matrix m = Matrix::from_columns(ring->field(), ring->nvars(), {0}, std::move(cols));
  return cokernel(std::move(ring), std::move(m));
}

SubmodulePresentation SubmodulePresentation::ideal(RingPtr ring, std::span<const Polynomial> gens) {
  std::vector<ModuleElement> cols;
  for (const auto& g : gens) cols.push_back(ModuleElement(std::vector<Polynomial>{g}));
  Matrix m = Matrix::from_columns(ring->field(), ring->nvars(), {0}, std::move(cols));
  return submodule(std::move(ring), std::move(m));
}

HilbertSeries SubmodulePresentation::hilbert_series() const {
  HilbertSeries coker = quotient_series(basis_);
  if (mode_ == PresentationMode::Cokernel) return coker;
  HilbertSeries whole = ring_->free_module_series(row_degrees());
  whole -= coker;
  return whole;
}

Length SubmodulePresentation::length() const { return hilbert_series().length(); }

int SubmodulePresentation::dimension() const {
  if (mode_ == PresentationMode::Submodule) return hilbert_series().dimension();
  auto leads = basis_.leading_monomials();
  int best = -1;
  for (const auto& l : leads) best = std::max(best, independent_set_dimension(ring_->nvars(), l));
  return best;
}

bool SubmodulePresentation::is_zero() const { return dimension() == -1; }

GroebnerBasis groebner_basis(std::span<const ModuleElement> gens, std::vector<Degree> row_degrees,
                             const QuotientRing& ring, bool over_quotient,
                             const GroebnerOptions& options) {
  std::vector<ModuleElement> fixed;
  if (over_quotient) fixed = ring.ideal_relations(row_degrees.size());
  return buchberger(ring.field(), ring.nvars(), std::move(row_degrees), fixed, gens, options).basis;
}

ModuleElement normal_form(const ModuleElement& v, const GroebnerBasis& gb) {
  return gb.normal_form(v);
}

Lifter::Lifter(RingPtr ring, const Matrix& generators, const GroebnerOptions& options)
    : ring_(std::move(ring)), rows_(generators.rows()), col_degrees_(generators.col_degrees()),
      basis_(elimination_basis(ring_, generators, {}, options)) {}

std::optional<ModuleElement> Lifter::lift(const ModuleElement& v) const {
  if (v.rank() != rows_) throw Error(ErrorKind::AmbientMismatch, "lift: element rank mismatch");
  ModuleElement r = basis_.normal_form(pad(v, col_degrees_.size()));
  for (std::size_t k = 0; k < rows_; ++k)
    if (!r[k].is_zero()) return std::nullopt;
  if (col_degrees_.empty()) return ModuleElement(v.field(), v.nvars(), 0);
  ModuleElement c = bottom_part(r, rows_);
  return ring_->reduce(c.scaled(v.field().neg(1)));
}

Matrix Lifter::syzygies() const { return eliminated_part(ring_, basis_, rows_, col_degrees_); }

Matrix syzygy_generators(const Matrix& a, const RingPtr& ring, const GroebnerOptions& options) {
  return Lifter(ring, a, options).syzygies();
}

Matrix preimage(const Matrix& a, std::span<const ModuleElement> target, const RingPtr& ring,
                const GroebnerOptions& options) {
  auto gb = elimination_basis(ring, a, target, options);
  return eliminated_part(ring, gb, a.rows(), a.col_degrees());
}

Matrix minimal_generators(const RingPtr& ring, std::vector<Degree> row_degrees,
                          std::vector<ModuleElement> candidates, const GroebnerOptions& options) {
  std::vector<ModuleElement> nonzero;
  for (auto& c : candidates) {
    ModuleElement r = ring->reduce(c);
    if (!r.is_zero()) nonzero.push_back(r.monic());
  }
  std::stable_sort(nonzero.begin(), nonzero.end(),
                   [&](const ModuleElement& a, const ModuleElement& b) {
                     return generator_less(a, b, row_degrees);
                   });
  auto fixed = ring->ideal_relations(row_degrees.size());
  auto result = buchberger(ring->field(), ring->nvars(), row_degrees, fixed, nonzero, options);
  std::vector<ModuleElement> chosen;
  for (std::size_t idx : result.minimal_generators) chosen.push_back(nonzero[idx]);
  std::stable_sort(chosen.begin(), chosen.end(), [&](const ModuleElement& a, const ModuleElement& b) {
    return generator_less(a, b, row_degrees);
  });
  return Matrix::from_columns(ring->field(), ring->nvars(), std::move(row_degrees), std::move(chosen));
}

Matrix kernel_over_quotient(const Matrix& a, const RingPtr& ring, const GroebnerOptions& options) {
  Matrix syz = syzygy_generators(a, ring, options);
  std::vector<ModuleElement> cols = syz.columns();
  return minimal_generators(ring, a.col_degrees(), std::move(cols), options);
}

SubmodulePresentation ideal_quotient(const SubmodulePresentation& n, const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroDivisorQuery, "ideal quotient by the zero element");
  auto fd = f.homogeneous_degree();
  if (!fd) throw Error(ErrorKind::NotHomogeneous, "ideal quotient by an inhomogeneous element");
  const RingPtr& ring = n.ring();
  const std::size_t rank = n.rank();
  std::vector<Degree> target_degrees;
  for (Degree d : n.row_degrees()) target_degrees.push_back(d - static_cast<Degree>(*fd));
  std::vector<ModuleElement> cols;
  for (std::size_t k = 0; k < rank; ++k) {
    ModuleElement c(ring->field(), ring->nvars(), rank);
    c[k] = f;
    cols.push_back(std::move(c));
  }
  Matrix a(ring->field(), ring->nvars(), target_degrees, n.row_degrees(), std::move(cols));
  Matrix pre = preimage(a, n.generators().columns(), ring);
  std::vector<ModuleElement> gens = pre.columns();
  Matrix result = minimal_generators(ring, n.row_degrees(), std::move(gens));
  return SubmodulePresentation(ring, std::move(result), PresentationMode::Submodule);
}

namespace {

SubmodulePresentation colon_irrelevant(const SubmodulePresentation& n) {
  const RingPtr& ring = n.ring();
  const std::size_t rank = n.rank(), nv = ring->nvars();
  std::vector<Degree> target_degrees;
  for (std::size_t i = 0; i < nv; ++i)
    for (Degree d : n.row_degrees()) target_degrees.push_back(d - 1);
  std::vector<ModuleElement> cols;
  for (std::size_t k = 0; k < rank; ++k) {
    ModuleElement c(ring->field(), nv, rank * nv);
    for (std::size_t i = 0; i < nv; ++i) c[i * rank + k] = ring->variable(i);
    cols.push_back(std::move(c));
  }
  Matrix a(ring->field(), nv, target_degrees, n.row_degrees(), std::move(cols));
  std::vector<ModuleElement> target;
  for (std::size_t i = 0; i < nv; ++i)
    for (const auto& g : n.generators().columns()) {
      ModuleElement t(ring->field(), nv, rank * nv);
      for (std::size_t k = 0; k < rank; ++k) t[i * rank + k] = g[k];
      target.push_back(std::move(t));
    }
  Matrix pre = preimage(a, target, ring);
  std::vector<ModuleElement> gens = pre.columns();
  Matrix result = minimal_generators(ring, n.row_degrees(), std::move(gens));
  return SubmodulePresentation(ring, std::move(result), PresentationMode::Submodule);
}

}  // namespace

SubmodulePresentation saturate_at_irrelevant(const SubmodulePresentation& n) {
  SubmodulePresentation current(n.ring(), n.generators(), PresentationMode::Submodule);
  for (;;) {
    SubmodulePresentation next = colon_irrelevant(current);
    if (next.same_span(current))
      return SubmodulePresentation(n.ring(), current.generators(), n.mode());
    current = std::move(next);
  }
}

std::optional<ModuleElement> membership_lift(const ModuleElement& v, const SubmodulePresentation& n) {
  if (v.rank() != n.rank()) throw Error(ErrorKind::AmbientMismatch, "membership_lift: rank mismatch");
  if (v.is_zero()) return ModuleElement(v.field(), v.nvars(), n.generators().cols());
  return Lifter(n.ring(), n.generators()).lift(v);
}

Length length(const SubmodulePresentation& n) { return n.length(); }

int dimension(const SubmodulePresentation& n) { return n.dimension(); }

}  // namespace fb
