#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fb/ring.hpp"

namespace fb {

enum class PresentationMode { Submodule, Cokernel };

// A graded R-module given by a generating matrix inside R^r: either the
// span of the columns (Submodule) or R^r modulo that span (Cokernel). The
// Groebner basis of span + I*R^r over S is computed at construction.
class SubmodulePresentation {
 public:
  SubmodulePresentation(RingPtr ring, Matrix generators, PresentationMode mode,
                        const GroebnerOptions& options = {});

  static SubmodulePresentation cokernel(RingPtr ring, Matrix generators) {
    return SubmodulePresentation(std::move(ring), std::move(generators), PresentationMode::Cokernel);
  }
  static SubmodulePresentation submodule(RingPtr ring, Matrix generators) {
    return SubmodulePresentation(std::move(ring), std::move(generators), PresentationMode::Submodule);
  }
  // R/J as a cokernel of the row [g_1 ... g_k].
  static SubmodulePresentation quotient_ring_module(RingPtr ring, std::span<const Polynomial> ideal);
  // J as a submodule of R.
  static SubmodulePresentation ideal(RingPtr ring, std::span<const Polynomial> gens);

  const RingPtr& ring() const noexcept { return ring_; }
  const Matrix& generators() const noexcept { return generators_; }
  PresentationMode mode() const noexcept { return mode_; }
  std::size_t rank() const noexcept { return generators_.rows(); }
  const std::vector<Degree>& row_degrees() const noexcept { return generators_.row_degrees(); }
  const GroebnerBasis& basis() const noexcept { return basis_; }

  // Answers for the module itself: the span in Submodule mode, R^r/span in
  // Cokernel mode.
  HilbertSeries hilbert_series() const;
  Length length() const;
  int dimension() const;
  bool is_zero() const;

  // Same span modulo I (reduced Groebner basis equality).
  bool same_span(const SubmodulePresentation& other) const { return basis_ == other.basis_; }
  bool contains(const ModuleElement& v) const { return basis_.contains(v); }

 private:
  RingPtr ring_;
  Matrix generators_;
  PresentationMode mode_;
  GroebnerBasis basis_;
};

// Reduced Groebner basis of span(gens) over S, or of span(gens) + I*S^r
// when `over_quotient`.
GroebnerBasis groebner_basis(std::span<const ModuleElement> gens, std::vector<Degree> row_degrees,
                             const QuotientRing& ring, bool over_quotient,
                             const GroebnerOptions& options = {});

ModuleElement normal_form(const ModuleElement& v, const GroebnerBasis& gb);

// Elimination data for a generating matrix A over R: a Groebner basis of
// the columns (A_j, e_j) together with (I*R^b, 0), position-over-term
// with the rows of A on top. It yields the syzygies of A and liftings of
// elements of span(A).
class Lifter {
 public:
  Lifter(RingPtr ring, const Matrix& generators, const GroebnerOptions& options = {});

  // c with A*c = v modulo I, or nullopt when v is not in span(A) + I*R^b.
  std::optional<ModuleElement> lift(const ModuleElement& v) const;
  // Generators of {c : A*c in I*R^b} modulo I (not minimalized).
  Matrix syzygies() const;

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::vector<Degree> col_degrees_;
  GroebnerBasis basis_;
};

// Generators of the full syzygy module of the columns of A over the ring
// (over R = S/I: relations modulo I). A * result = 0 in R.
Matrix syzygy_generators(const Matrix& a, const RingPtr& ring, const GroebnerOptions& options = {});

// Minimal generators of ker_R(A), chosen lowest degree first, then by
// largest leading term (position-over-term).
Matrix kernel_over_quotient(const Matrix& a, const RingPtr& ring, const GroebnerOptions& options = {});

// {c : A*c in span(target) + I*R^b}, not minimalized.
Matrix preimage(const Matrix& a, std::span<const ModuleElement> target, const RingPtr& ring,
                const GroebnerOptions& options = {});

// Minimal generators (mod I) among homogeneous candidates in R^r, in the
// deterministic order: lowest degree first, then largest leading term.
Matrix minimal_generators(const RingPtr& ring, std::vector<Degree> row_degrees,
                          std::vector<ModuleElement> candidates, const GroebnerOptions& options = {});

// (N : f) = {v : f*v in N}, as a submodule of the same free module.
SubmodulePresentation ideal_quotient(const SubmodulePresentation& n, const Polynomial& f);

// (N : m^infinity) by iterating N <- (N : m) until the span stabilizes.
SubmodulePresentation saturate_at_irrelevant(const SubmodulePresentation& n);

std::optional<ModuleElement> membership_lift(const ModuleElement& v, const SubmodulePresentation& n);

Length length(const SubmodulePresentation& n);
int dimension(const SubmodulePresentation& n);

}  // namespace fb
